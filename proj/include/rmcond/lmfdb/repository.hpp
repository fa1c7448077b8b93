#pragma once

#include "rmcond/lmfdb/cache.hpp"
#include "rmcond/lmfdb/client.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

namespace rmcond::lmfdb {

// Resolves levels from complete fixtures, then the cache, then the network;
// network answers are appended to the cache. A partial fixture is returned
// only when the network cannot supply the level.
class OrbitRepository {
public:
    // `cache` and `client` may be null; without a client the repository is offline.
    OrbitRepository(std::vector<OrbitEntry> fixtures, std::shared_ptr<OrbitCache> cache,
                    std::unique_ptr<LmfdbClient> client, std::uint64_t max_served_level = ApiConfig{}.max_served_level);

    // Throws NetworkUnavailable (offline, not stored), LevelNotServed, or
    // whatever the client throws.
    LevelQueryResult fetch_orbit_dims(const Natural& level);

    bool offline() const noexcept { return !client_; }
    const LmfdbClient* client() const noexcept { return client_.get(); }

private:
    std::map<Natural, OrbitEntry> fixtures_;
    std::shared_ptr<OrbitCache> cache_;
    std::unique_ptr<LmfdbClient> client_;
    std::uint64_t max_served_level_;
};

}  // namespace rmcond::lmfdb
