#pragma once

#include "rmcond/bounds.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rmcond {

enum class Sharpness { sharp, almost_sharp, unknown };

std::string to_string(Sharpness s);
Sharpness sharpness_from_string(const std::string& s);

struct TableCell {
    BoundTriple bounds;
    Sharpness sharpness = Sharpness::unknown;

    bool shows_b0() const { return bounds.b0 < bounds.bk_prime; }
    // "B'" or "B' (B0)"; a sharpness mark ("!" sharp, "*" almost sharp)
    // follows the value it qualifies when `marks` is set.
    std::string display(bool marks = true) const;

    friend bool operator==(const TableCell&, const TableCell&) = default;
};

// Keyed by (p, d).
using SharpnessMap = std::map<std::pair<std::uint64_t, std::uint64_t>, Sharpness>;

struct BoundTable {
    std::vector<std::uint64_t> dims;      // rows
    std::vector<PrimeNumber> primes;      // columns
    std::vector<std::vector<std::optional<TableCell>>> cells;  // [row][col]

    const std::optional<TableCell>& at(std::uint64_t d, std::uint64_t p) const;
};

// Rows d = 1..d_max, columns the primes p <= p_max. Cells with p > 2d + 1
// (where every bound equals 2) are left empty unless `full`.
BoundTable render_table(std::uint64_t d_max, std::uint64_t p_max, const SharpnessMap* sharpness = nullptr,
                        bool full = false);

}  // namespace rmcond
