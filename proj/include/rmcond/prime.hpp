#pragma once

#include "rmcond/natural.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

namespace rmcond {

// Deterministic Miller-Rabin; exact for every 64-bit input.
bool is_prime(std::uint64_t n);

// A rational prime. Construction runs the primality check.
class PrimeNumber {
public:
    explicit PrimeNumber(std::uint64_t p);
    explicit PrimeNumber(const Natural& p);

    static std::optional<PrimeNumber> try_make(std::uint64_t p);

    std::uint64_t value() const noexcept { return p_; }
    Natural natural() const { return Natural(p_); }

    friend bool operator==(PrimeNumber, PrimeNumber) = default;
    friend std::strong_ordering operator<=>(PrimeNumber, PrimeNumber) = default;

private:
    std::uint64_t p_;
};

// All primes p <= bound, ascending.
std::vector<PrimeNumber> primes_up_to(std::uint64_t bound);

}  // namespace rmcond
