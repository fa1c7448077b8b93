#include "rmcond/prime.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace rmcond {

namespace {

__extension__ typedef unsigned __int128 u128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m)
{
    std::uint64_t result = 1;
    base %= m;
    while (exp) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

}  // namespace

bool is_prime(std::uint64_t n)
{
    if (n < 2) return false;
    // These bases make Miller-Rabin exact below 3.3e24.
    constexpr std::array<std::uint64_t, 12> bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (auto b : bases) {
        if (n % b == 0) return n == b;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (auto a : bases) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

PrimeNumber::PrimeNumber(std::uint64_t p) : p_(p)
{
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
}

PrimeNumber::PrimeNumber(const Natural& p)
    : PrimeNumber(p.fits_u64() ? p.to_u64() : throw std::invalid_argument(p.str() + " exceeds the 64-bit prime range"))
{
}

std::optional<PrimeNumber> PrimeNumber::try_make(std::uint64_t p)
{
    if (!is_prime(p)) return std::nullopt;
    return PrimeNumber(p);
}

std::vector<PrimeNumber> primes_up_to(std::uint64_t bound)
{
    std::vector<PrimeNumber> out;
    if (bound < 2) return out;
    std::vector<bool> composite(bound + 1, false);
    for (std::uint64_t i = 2; i <= bound; ++i) {
        if (composite[i]) continue;
        out.emplace_back(i);
        for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
    }
    return out;
}

}  // namespace rmcond
