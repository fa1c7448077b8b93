#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>

namespace rmcond {

// Non-negative integer of unbounded size. Every operation that would leave
// the naturals (subtraction below zero, division by zero) throws instead.
class Natural {
public:
    Natural() = default;

    template <std::integral T>
        requires(!std::same_as<T, bool>)
    Natural(T v)  // NOLINT(google-explicit-constructor)
    {
        if constexpr (std::is_signed_v<T>) {
            if (v < 0) throw std::domain_error("Natural: negative value");
        }
        value_ = static_cast<unsigned long>(v);
    }

    explicit Natural(mpz_class v);

    // Decimal digits only, no sign, no whitespace.
    static Natural parse(std::string_view text);

    const mpz_class& mpz() const noexcept { return value_; }
    bool is_zero() const noexcept { return sgn(value_) == 0; }
    bool fits_u64() const noexcept { return value_.fits_ulong_p(); }
    std::uint64_t to_u64() const;
    std::string str() const { return value_.get_str(); }

    Natural pow(unsigned long exponent) const;
    // True iff *this divides n (0 divides only 0).
    bool divides(const Natural& n) const;

    Natural& operator+=(const Natural& o)
    {
        value_ += o.value_;
        return *this;
    }
    Natural& operator-=(const Natural& o);
    Natural& operator*=(const Natural& o)
    {
        value_ *= o.value_;
        return *this;
    }
    Natural& operator/=(const Natural& o);  // floor division
    Natural& operator%=(const Natural& o);

    friend Natural operator+(Natural a, const Natural& b) { return a += b; }
    friend Natural operator-(Natural a, const Natural& b) { return a -= b; }
    friend Natural operator*(Natural a, const Natural& b) { return a *= b; }
    friend Natural operator/(Natural a, const Natural& b) { return a /= b; }
    friend Natural operator%(Natural a, const Natural& b) { return a %= b; }

    friend bool operator==(const Natural& a, const Natural& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Natural& a, const Natural& b)
    {
        return cmp(a.value_, b.value_) <=> 0;
    }

private:
    mpz_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Natural& n);

// Saturating difference max(a - b, 0).
Natural monus(const Natural& a, const Natural& b);

}  // namespace rmcond
