#include "rmcond/bounds.hpp"

#include "rmcond/arith.hpp"

#include <stdexcept>

namespace rmcond {

namespace {

void require_dimension(const Natural& d)
{
    if (d.is_zero()) throw std::invalid_argument("dimension must be at least 1");
}

// p t + (p - 1) lambda_p(t), the part of B(p,d) beyond 2d.
Natural wild_part(PrimeNumber p, const Natural& d)
{
    const Natural pm1 = Natural(p.value() - 1);
    const Natural t = (Natural(2) * d) / pm1;
    return p.natural() * t + pm1 * lambda_p(p, t);
}

}  // namespace

Natural bk_bound(PrimeNumber p, const Natural& d)
{
    require_dimension(d);
    return Natural(2) * d + wild_part(p, d);
}

Natural bk_prime_bound(PrimeNumber p, const Natural& d)
{
    require_dimension(d);
    return Natural(2) + wild_part(p, d) / d;
}

Natural b0_bound(PrimeNumber p, const Natural& d)
{
    require_dimension(d);
    const Natural twice_v = Natural(2) * valuation(p, d);
    switch (p.value()) {
    case 2: return Natural(8) + twice_v;
    case 3: return Natural(5) + twice_v;
    default:
        if (Natural(p.value() - 1).divides(Natural(2) * d)) return Natural(4) + twice_v;
        return 2;
    }
}

Natural b0_gl2_bound(PrimeNumber p, const Natural& d)
{
    Natural b = b0_bound(p, d);
    if (p.value() == 2) b += 1;
    return b;
}

Natural forced_subfield_exponent(PrimeNumber p, const Natural& e)
{
    const bool two = p.value() == 2;
    const bool three = p.value() == 3;
    if (e < (two ? 9 : 3)) return 0;
    // ceil((e - v_p(3)) / 2) - 1 - v_p(2), clamped at 0.
    const Natural shifted = three ? e - 1 : e;
    const Natural half_up = (shifted + 1) / 2;
    return monus(half_up, Natural(two ? 2 : 1));
}

BoundTriple bound_triple(PrimeNumber p, const Natural& d)
{
    return BoundTriple{p, d, bk_bound(p, d), bk_prime_bound(p, d), b0_bound(p, d)};
}

}  // namespace rmcond
