#include "rmcond/natural.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

namespace rmcond {

Natural::Natural(mpz_class v) : value_(std::move(v))
{
    if (sgn(value_) < 0) throw std::domain_error("Natural: negative value");
}

Natural Natural::parse(std::string_view text)
{
    if (text.empty() || !std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); })) {
        throw std::invalid_argument("not a natural number: '" + std::string(text) + "'");
    }
    return Natural(mpz_class(std::string(text), 10));
}

std::uint64_t Natural::to_u64() const
{
    if (!fits_u64()) throw std::overflow_error("Natural " + str() + " does not fit in 64 bits");
    return value_.get_ui();
}

Natural Natural::pow(unsigned long exponent) const
{
    mpz_class out;
    mpz_pow_ui(out.get_mpz_t(), value_.get_mpz_t(), exponent);
    return Natural(std::move(out));
}

bool Natural::divides(const Natural& n) const
{
    if (is_zero()) return n.is_zero();
    return mpz_divisible_p(n.value_.get_mpz_t(), value_.get_mpz_t()) != 0;
}

Natural& Natural::operator-=(const Natural& o)
{
    if (cmp(value_, o.value_) < 0) throw std::domain_error("Natural: subtraction below zero");
    value_ -= o.value_;
    return *this;
}

Natural& Natural::operator/=(const Natural& o)
{
    if (o.is_zero()) throw std::domain_error("Natural: division by zero");
    mpz_fdiv_q(value_.get_mpz_t(), value_.get_mpz_t(), o.value_.get_mpz_t());
    return *this;
}

Natural& Natural::operator%=(const Natural& o)
{
    if (o.is_zero()) throw std::domain_error("Natural: division by zero");
    mpz_fdiv_r(value_.get_mpz_t(), value_.get_mpz_t(), o.value_.get_mpz_t());
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Natural& n) { return os << n.str(); }

Natural monus(const Natural& a, const Natural& b) { return a > b ? a - b : Natural{}; }

}  // namespace rmcond
