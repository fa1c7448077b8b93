#pragma once

// Machine-integer reimplementations of the bound formulas, written directly
// from their definitions and sharing no code with the library.

#include <cstdint>
#include <map>

namespace rmcond::testing {

inline std::uint64_t oracle_lambda(std::uint64_t p, std::uint64_t m)
{
    std::uint64_t sum = 0, place = 1;
    for (std::uint64_t i = 0; m; ++i, m /= p, place *= p) sum += i * (m % p) * place;
    return sum;
}

inline std::uint64_t oracle_bk(std::uint64_t p, std::uint64_t d)
{
    const std::uint64_t t = 2 * d / (p - 1);
    return 2 * d + p * t + (p - 1) * oracle_lambda(p, t);
}

inline std::uint64_t oracle_forced_r(std::uint64_t p, std::uint64_t e)
{
    if (e < (p == 2 ? 9 : 3)) return 0;
    const std::uint64_t shifted = e - (p == 3 ? 1 : 0);
    return (shifted + 1) / 2 - 1 - (p == 2 ? 1 : 0);
}

// Degree of Q(zeta_{p^r})^+, saturating at cap + 1.
inline std::uint64_t oracle_degree(std::uint64_t p, std::uint64_t r, std::uint64_t cap)
{
    if (r == 0) return 1;
    if (p == 2) {
        if (r <= 2) return 1;
        std::uint64_t deg = 1;
        for (std::uint64_t i = 2; i < r; ++i)
            if ((deg *= 2) > cap) return cap + 1;
        return deg;
    }
    std::uint64_t deg = (p - 1) / 2;
    for (std::uint64_t i = 1; i < r; ++i) {
        if (deg > cap) return cap + 1;
        deg *= p;
    }
    return deg;
}

inline std::uint64_t oracle_b0(std::uint64_t p, std::uint64_t d)
{
    std::uint64_t best = 0;
    for (std::uint64_t e = 0; e <= 60; ++e) {
        if (d % oracle_degree(p, oracle_forced_r(p, e), d) == 0) best = e;
    }
    return best;
}

// Admissible iff the product of forced degrees (distinct primes give
// linearly disjoint fields) divides d.
inline bool oracle_admissible(const std::map<std::uint64_t, std::uint64_t>& profile, std::uint64_t d)
{
    std::uint64_t deg = 1;
    for (const auto& [p, e] : profile) {
        const std::uint64_t f = oracle_degree(p, oracle_forced_r(p, e), d);
        if (f > d) return false;
        deg *= f;
        if (deg > d) return false;
    }
    return d % deg == 0;
}

}  // namespace rmcond::testing
