#pragma once

#include "rmcond/natural.hpp"
#include "rmcond/prime.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace rmcond {

// Largest k with p^k | n. Throws std::domain_error for n = 0.
Natural valuation(PrimeNumber p, const Natural& n);

// Little-endian base-p digits; empty for m = 0.
std::vector<Natural> digits_base_p(PrimeNumber p, const Natural& m);

// sum_i i * c_i * p^i over the base-p digits c_i of m.
Natural lambda_p(PrimeNumber p, const Natural& m);

// [Q(zeta_{p^r})^+ : Q], i.e. max(1, phi(p^r)/2).
Natural real_cyclotomic_degree(PrimeNumber p, const Natural& r);

struct TrialFactorization {
    std::vector<std::pair<PrimeNumber, Natural>> factors;  // ascending primes
    Natural cofactor;                                      // part with no prime factor <= bound
};

// Strips every prime factor up to `bound` from n >= 1.
TrialFactorization factor_by_trial_division(const Natural& n, std::uint64_t bound);

}  // namespace rmcond
