#pragma once

#include "rmcond/lmfdb/records.hpp"

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>

namespace rmcond::lmfdb {

// {"level": 243, "weight": 2, "char_trivial": true, "dims": [1, 1, 2], "fetched_at": "..."}
// with a trailing `"complete": false` member only for partial entries. No newline.
// Throws std::invalid_argument for levels beyond 64 bits.
std::string format_cache_line(const OrbitEntry& entry);

// Throws MalformedResponse on schema mismatch, including weight other than 2
// or nontrivial character.
OrbitEntry parse_cache_line(std::string_view line);

// Append-only JSON-lines store, one entry per line, last line per level wins.
// Safe for one writer and any number of concurrent readers.
class OrbitCache {
public:
    explicit OrbitCache(std::filesystem::path path);

    std::optional<OrbitEntry> find(const Natural& level) const;
    void append(const OrbitEntry& entry);
    void reload();

    std::size_t size() const;
    // Lines dropped on the last load because they did not parse.
    std::size_t skipped_lines() const;
    const std::filesystem::path& path() const noexcept { return path_; }

private:
    std::filesystem::path path_;
    mutable std::shared_mutex mutex_;
    std::map<Natural, OrbitEntry> entries_;
    std::size_t skipped_ = 0;
};

// Orbit data shipped with the library for levels with known orbit degrees.
const std::vector<OrbitEntry>& builtin_fixtures();

// Fixture file in cache-line format.
std::vector<OrbitEntry> load_fixture_file(const std::filesystem::path& path);

}  // namespace rmcond::lmfdb
