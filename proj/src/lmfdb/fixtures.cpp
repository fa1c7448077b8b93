#include "rmcond/lmfdb/cache.hpp"

#include <sstream>

namespace rmcond::lmfdb {

namespace {

// Levels whose orbit degrees are known from newform
// decompositions. Only 243 is a complete decomposition; the rest record the
// degrees known to occur. Levels > 10000 are outside the API's range.
constexpr const char* kFixtureLines = R"(
{"level": 243, "weight": 2, "char_trivial": true, "dims": [1, 1, 2, 2, 3, 3], "fetched_at": "1970-01-01T00:00:00Z"}
{"level": 256, "weight": 2, "char_trivial": true, "dims": [1], "fetched_at": "1970-01-01T00:00:00Z", "complete": false}
{"level": 1331, "weight": 2, "char_trivial": true, "dims": [10], "fetched_at": "1970-01-01T00:00:00Z", "complete": false}
{"level": 6859, "weight": 2, "char_trivial": true, "dims": [9], "fetched_at": "1970-01-01T00:00:00Z", "complete": false}
{"level": 8750, "weight": 2, "char_trivial": true, "dims": [10], "fetched_at": "1970-01-01T00:00:00Z", "complete": false}
{"level": 11264, "weight": 2, "char_trivial": true, "dims": [10], "fetched_at": "1970-01-01T00:00:00Z", "complete": false}
{"level": 12032, "weight": 2, "char_trivial": true, "dims": [7], "fetched_at": "1970-01-01T00:00:00Z", "complete": false}
{"level": 14592, "weight": 2, "char_trivial": true, "dims": [9], "fetched_at": "1970-01-01T00:00:00Z", "complete": false}
{"level": 14641, "weight": 2, "char_trivial": true, "dims": [5], "fetched_at": "1970-01-01T00:00:00Z", "complete": false}
{"level": 16384, "weight": 2, "char_trivial": true, "dims": [8], "fetched_at": "1970-01-01T00:00:00Z", "complete": false}
{"level": 18750, "weight": 2, "char_trivial": true, "dims": [20], "fetched_at": "1970-01-01T00:00:00Z", "complete": false}
{"level": 19683, "weight": 2, "char_trivial": true, "dims": [9], "fetched_at": "1970-01-01T00:00:00Z", "complete": false}
{"level": 28125, "weight": 2, "char_trivial": true, "dims": [20], "fetched_at": "1970-01-01T00:00:00Z", "complete": false}
{"level": 35152, "weight": 2, "char_trivial": true, "dims": [12], "fetched_at": "1970-01-01T00:00:00Z", "complete": false}
{"level": 39546, "weight": 2, "char_trivial": true, "dims": [12], "fetched_at": "1970-01-01T00:00:00Z", "complete": false}
{"level": 44217, "weight": 2, "char_trivial": true, "dims": [16], "fetched_at": "1970-01-01T00:00:00Z", "complete": false}
{"level": 50000, "weight": 2, "char_trivial": true, "dims": [20], "fetched_at": "1970-01-01T00:00:00Z", "complete": false}
{"level": 56250, "weight": 2, "char_trivial": true, "dims": [20], "fetched_at": "1970-01-01T00:00:00Z", "complete": false}
{"level": 70304, "weight": 2, "char_trivial": true, "dims": [12], "fetched_at": "1970-01-01T00:00:00Z", "complete": false}
)";

std::vector<OrbitEntry> parse_builtin()
{
    std::vector<OrbitEntry> out;
    std::istringstream in(kFixtureLines);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty()) out.push_back(parse_cache_line(line));
    }
    return out;
}

}  // namespace

const std::vector<OrbitEntry>& builtin_fixtures()
{
    static const std::vector<OrbitEntry> fixtures = parse_builtin();
    return fixtures;
}

}  // namespace rmcond::lmfdb
