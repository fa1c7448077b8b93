#include "rmcond/lmfdb/records.hpp"

#include <algorithm>
#include <ctime>

namespace rmcond::lmfdb {

std::string to_string(DataSource s)
{
    switch (s) {
    case DataSource::network: return "network";
    case DataSource::cache: return "cache";
    case DataSource::fixture: return "fixture";
    }
    return "network";
}

DataSource data_source_from_string(const std::string& s)
{
    if (s == "network") return DataSource::network;
    if (s == "cache") return DataSource::cache;
    if (s == "fixture") return DataSource::fixture;
    throw std::invalid_argument("unknown data source '" + s + "'");
}

bool LevelQueryResult::has_dim(const Natural& d) const
{
    return std::any_of(records.begin(), records.end(), [&](const NewformOrbitRecord& r) { return r.dim == d; });
}

std::vector<Natural> LevelQueryResult::dims() const
{
    std::vector<Natural> out;
    out.reserve(records.size());
    for (const auto& r : records) out.push_back(r.dim);
    return out;
}

LevelQueryResult to_result(const OrbitEntry& entry, DataSource source)
{
    LevelQueryResult result;
    result.level = entry.level;
    result.source = source;
    result.fetched_at = entry.fetched_at;
    result.complete = entry.complete;
    for (const auto& dim : entry.dims) result.records.push_back({entry.level, entry.weight, entry.char_trivial, dim});
    std::stable_sort(result.records.begin(), result.records.end(),
                     [](const NewformOrbitRecord& a, const NewformOrbitRecord& b) { return a.dim < b.dim; });
    return result;
}

std::string utc_timestamp(std::chrono::system_clock::time_point t)
{
    const std::time_t secs = std::chrono::system_clock::to_time_t(t);
    std::tm tm{};
    gmtime_r(&secs, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace rmcond::lmfdb
