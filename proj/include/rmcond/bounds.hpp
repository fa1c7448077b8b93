#pragma once

#include "rmcond/natural.hpp"
#include "rmcond/prime.hpp"

namespace rmcond {

// Brumer-Kramer bound on v_p of the conductor of a d-dimensional abelian
// variety: 2d + p t + (p - 1) lambda_p(t) with t = floor(2d / (p - 1)).
Natural bk_bound(PrimeNumber p, const Natural& d);

// The same bound read as a cap on v_p(N) for conductor N^d:
// 2 + floor((p t + (p - 1) lambda_p(t)) / d) = floor(B(p,d) / d).
Natural bk_prime_bound(PrimeNumber p, const Natural& d);

// Cap on v_p(N) for a simple d-dimensional abelian variety with maximal
// real multiplication and conductor N^d:
//   8 + 2 v_2(d)   p = 2
//   5 + 2 v_3(d)   p = 3
//   4 + 2 v_p(d)   p >= 5 and (p - 1) | 2d
//   2              otherwise
Natural b0_bound(PrimeNumber p, const Natural& d);

// Per-dimension exponent cap for simple GL(2)-type varieties (possibly with
// nebentypus): one larger than b0_bound at p = 2, unchanged elsewhere.
Natural b0_gl2_bound(PrimeNumber p, const Natural& d);

// Exponent r such that v_p(N) = e forces Q(zeta_{p^r})^+ into the
// rationality field of every newform of level N:
//   r = ceil(e/2 - v_p(3)/2) - 1 - v_p(2)
// Returns 0 below the thresholds e >= 3 (odd p) and e >= 9 (p = 2).
Natural forced_subfield_exponent(PrimeNumber p, const Natural& e);

struct BoundTriple {
    PrimeNumber p;
    Natural d;
    Natural bk;
    Natural bk_prime;
    Natural b0;

    friend bool operator==(const BoundTriple&, const BoundTriple&) = default;
};

// Throws std::invalid_argument for d = 0.
BoundTriple bound_triple(PrimeNumber p, const Natural& d);

}  // namespace rmcond
