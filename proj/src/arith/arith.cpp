#include "rmcond/arith.hpp"

#include <stdexcept>

namespace rmcond {

Natural valuation(PrimeNumber p, const Natural& n)
{
    if (n.is_zero()) throw std::domain_error("valuation of 0 is undefined");
    mpz_class rest = n.mpz();
    mpz_class prime = p.value();
    unsigned long k = mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), prime.get_mpz_t());
    return Natural(k);
}

std::vector<Natural> digits_base_p(PrimeNumber p, const Natural& m)
{
    std::vector<Natural> digits;
    const Natural base = p.natural();
    Natural rest = m;
    while (!rest.is_zero()) {
        digits.push_back(rest % base);
        rest /= base;
    }
    return digits;
}

Natural lambda_p(PrimeNumber p, const Natural& m)
{
    Natural sum;
    Natural place = 1;
    unsigned long i = 0;
    for (const auto& c : digits_base_p(p, m)) {
        sum += Natural(i) * c * place;
        place *= p.natural();
        ++i;
    }
    return sum;
}

Natural real_cyclotomic_degree(PrimeNumber p, const Natural& r)
{
    if (p.value() == 2) {
        if (r <= 2) return 1;
        return Natural(2).pow((r - 2).to_u64());
    }
    if (r.is_zero()) return 1;
    // phi(p^r)/2 = p^(r-1) (p-1)/2, which is 1 for p = 3, r = 1.
    return p.natural().pow((r - 1).to_u64()) * Natural((p.value() - 1) / 2);
}

TrialFactorization factor_by_trial_division(const Natural& n, std::uint64_t bound)
{
    if (n.is_zero()) throw std::domain_error("cannot factor 0");
    TrialFactorization out;
    Natural rest = n;
    for (auto p : primes_up_to(bound)) {
        if (rest == 1) break;
        if (!p.natural().divides(rest)) continue;
        Natural k = valuation(p, rest);
        rest /= p.natural().pow(k.to_u64());
        out.factors.emplace_back(p, k);
    }
    out.cofactor = rest;
    return out;
}

}  // namespace rmcond
