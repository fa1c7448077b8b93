#pragma once

#include "rmcond/natural.hpp"

#include <chrono>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rmcond::lmfdb {

// One Galois orbit of newforms; dim = [K_f : Q].
struct NewformOrbitRecord {
    Natural level;
    unsigned weight = 2;
    bool char_trivial = true;
    Natural dim;

    friend bool operator==(const NewformOrbitRecord&, const NewformOrbitRecord&) = default;
};

enum class DataSource { network, cache, fixture };

std::string to_string(DataSource s);
DataSource data_source_from_string(const std::string& s);

// One stored level: the unit of the cache file and of the fixture store.
struct OrbitEntry {
    Natural level;
    unsigned weight = 2;
    bool char_trivial = true;
    std::vector<Natural> dims;  // ascending
    std::string fetched_at;     // ISO-8601 UTC
    // false when only some orbit degrees at this level are known.
    bool complete = true;

    friend bool operator==(const OrbitEntry&, const OrbitEntry&) = default;
};

struct LevelQueryResult {
    Natural level;
    std::vector<NewformOrbitRecord> records;  // ascending dim
    DataSource source = DataSource::network;
    std::string fetched_at;
    bool complete = true;

    bool has_dim(const Natural& d) const;
    std::vector<Natural> dims() const;

    friend bool operator==(const LevelQueryResult&, const LevelQueryResult&) = default;
};

LevelQueryResult to_result(const OrbitEntry& entry, DataSource source);

// "2026-10-14T09:30:00Z"
std::string utc_timestamp(std::chrono::system_clock::time_point t = std::chrono::system_clock::now());

class LmfdbError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// No route to the service, or offline mode with nothing cached.
class NetworkUnavailable : public LmfdbError {
public:
    using LmfdbError::LmfdbError;
};

// HTTP failure that survived the retry budget.
class ServiceError : public LmfdbError {
public:
    ServiceError(int status, std::optional<std::chrono::seconds> retry_after, const std::string& what)
        : LmfdbError(what), status_(status), retry_after_(retry_after)
    {
    }
    int status() const noexcept { return status_; }
    std::optional<std::chrono::seconds> retry_after() const noexcept { return retry_after_; }

private:
    int status_;
    std::optional<std::chrono::seconds> retry_after_;
};

class MalformedResponse : public LmfdbError {
public:
    using LmfdbError::LmfdbError;
};

// Level beyond what the API serves and absent from fixtures and cache.
class LevelNotServed : public LmfdbError {
public:
    using LmfdbError::LmfdbError;
};

}  // namespace rmcond::lmfdb
