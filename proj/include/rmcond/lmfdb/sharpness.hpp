#pragma once

#include "rmcond/lmfdb/repository.hpp"
#include "rmcond/prime.hpp"
#include "rmcond/table.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>

namespace rmcond::lmfdb {

enum class WitnessStatus { sharp, almost_sharp, none_found };

std::string to_string(WitnessStatus s);
WitnessStatus witness_status_from_string(const std::string& s);

struct SharpnessWitness {
    PrimeNumber p;
    Natural d;
    Natural bound;  // b0_bound(p, d)
    WitnessStatus status = WitnessStatus::none_found;
    std::optional<Natural> exponent_attained;
    std::optional<Natural> level;
    Natural level_budget;
    std::uint64_t levels_examined = 0;
    // Levels with no data, or partial data not mentioning degree d.
    std::uint64_t levels_inconclusive = 0;

    friend bool operator==(const SharpnessWitness&, const SharpnessWitness&) = default;
};

struct ScanProgress {
    PrimeNumber p;
    Natural d;
    Natural exponent;
    Natural level;
    std::uint64_t examined;
};

struct ScanOptions {
    // Treat NetworkUnavailable as "no data" instead of aborting (offline scans).
    bool skip_unavailable = false;
    std::function<void(const ScanProgress&)> on_level;
};

// Looks for a degree-d orbit at levels p^e M <= budget, p not dividing M,
// in increasing order: first e = b0_bound(p, d), then e - 1 when b0 > 2.
SharpnessWitness sharpness_scan(OrbitRepository& repo, PrimeNumber p, const Natural& d, const Natural& level_budget,
                                const ScanOptions& options = {});

using WitnessTable = std::map<std::pair<std::uint64_t, std::uint64_t>, SharpnessWitness>;  // (p, d)

// Scans every cell p <= 2d + 1, d <= d_max.
WitnessTable annotate_table(OrbitRepository& repo, std::uint64_t d_max, const Natural& level_budget,
                            const ScanOptions& options = {});

SharpnessMap to_sharpness_map(const WitnessTable& witnesses);

}  // namespace rmcond::lmfdb
