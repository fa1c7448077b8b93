#include "rmcond/lmfdb/repository.hpp"

namespace rmcond::lmfdb {

OrbitRepository::OrbitRepository(std::vector<OrbitEntry> fixtures, std::shared_ptr<OrbitCache> cache,
                                 std::unique_ptr<LmfdbClient> client, std::uint64_t max_served_level)
    : cache_(std::move(cache)), client_(std::move(client)), max_served_level_(max_served_level)
{
    for (auto& f : fixtures) {
        Natural level = f.level;
        fixtures_.insert_or_assign(std::move(level), std::move(f));
    }
}

LevelQueryResult OrbitRepository::fetch_orbit_dims(const Natural& level)
{
    if (level.is_zero()) throw std::invalid_argument("level must be at least 1");
    const auto fixture = fixtures_.find(level);
    const bool have_fixture = fixture != fixtures_.end();
    if (have_fixture && fixture->second.complete) return to_result(fixture->second, DataSource::fixture);
    if (cache_) {
        if (auto hit = cache_->find(level)) return to_result(*hit, DataSource::cache);
    }
    // a partial fixture stands in unless the service can give the full list
    if (have_fixture && (!client_ || level > max_served_level_)) return to_result(fixture->second, DataSource::fixture);
    if (!client_) throw NetworkUnavailable("offline, and level " + level.str() + " is neither a fixture nor cached");
    if (level > max_served_level_) {
        throw LevelNotServed("level " + level.str() + " exceeds the largest served level " +
                             std::to_string(max_served_level_));
    }
    OrbitEntry entry;
    entry.level = level;
    entry.dims = client_->fetch_dims(level);
    entry.fetched_at = utc_timestamp();
    if (cache_) cache_->append(entry);
    return to_result(entry, DataSource::network);
}

}  // namespace rmcond::lmfdb
