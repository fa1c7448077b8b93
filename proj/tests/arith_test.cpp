#include "rmcond/arith.hpp"
#include "rmcond/natural.hpp"
#include "rmcond/prime.hpp"
#include "support/gen.hpp"

#include <doctest.h>

#include <sstream>
#include <stdexcept>

using namespace rmcond;
using rmcond::testing::Gen;

__extension__ typedef unsigned __int128 u128;

TEST_SUITE("arith") {

TEST_CASE("Natural rejects negative and malformed input")
{
    CHECK_THROWS_AS(Natural(-1), std::domain_error);
    CHECK_THROWS_AS(Natural::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Natural::parse("-3"), std::invalid_argument);
    CHECK_THROWS_AS(Natural::parse("12a"), std::invalid_argument);
    CHECK(Natural::parse("007") == 7);
    CHECK_THROWS_AS(Natural(3) - Natural(4), std::domain_error);
    CHECK_THROWS_AS(Natural(3) / Natural(0), std::domain_error);
    CHECK_THROWS_AS(Natural(3) % Natural(0), std::domain_error);
    CHECK(monus(Natural(3), Natural(4)) == 0);
    CHECK(monus(Natural(9), Natural(4)) == 5);
}

TEST_CASE("Natural beyond 64 bits")
{
    const Natural big = Natural(2).pow(100);
    CHECK_FALSE(big.fits_u64());
    CHECK_THROWS_AS(big.to_u64(), std::overflow_error);
    CHECK(big.str() == "1267650600228229401496703205376");
    CHECK(Natural::parse(big.str()) == big);
    std::ostringstream os;
    os << big;
    CHECK(os.str() == big.str());
}

TEST_CASE("Natural arithmetic agrees with 128-bit machine arithmetic")
{
    Gen g(0x5eed01);
    for (int i = 0; i < 20000; ++i) {
        const std::uint64_t a = g.wide(), b = g.wide();
        const Natural na(a), nb(b);
        const u128 sum = u128(a) + b, prod = u128(a) * b;
        CHECK(((na + nb) / Natural(2).pow(64)).to_u64() == static_cast<std::uint64_t>(sum >> 64));
        CHECK(((na + nb) % Natural(2).pow(64)).to_u64() == static_cast<std::uint64_t>(sum));
        CHECK(((na * nb) / Natural(2).pow(64)).to_u64() == static_cast<std::uint64_t>(prod >> 64));
        CHECK(((na * nb) % Natural(2).pow(64)).to_u64() == static_cast<std::uint64_t>(prod));
        if (b) {
            CHECK((na / nb).to_u64() == a / b);
            CHECK((na % nb).to_u64() == a % b);
            CHECK(nb.divides(na) == (a % b == 0));
        }
        CHECK((na < nb) == (a < b));
        CHECK((na == nb) == (a == b));
        if (a >= b) CHECK((na - nb).to_u64() == a - b);
        CHECK(Natural::parse(na.str()) == na);
    }
}

TEST_CASE("zero divides only zero")
{
    CHECK(Natural(0).divides(0));
    CHECK_FALSE(Natural(0).divides(5));
    CHECK(Natural(5).divides(0));
}

TEST_CASE("Miller-Rabin agrees with trial division")
{
    for (std::uint64_t n = 0; n < 200000; ++n) REQUIRE_MESSAGE(is_prime(n) == testing::naive_is_prime(n), n);
    Gen g(0x5eed02);
    for (int i = 0; i < 2000; ++i) {
        const std::uint64_t n = g.uniform(1ULL << 40, 1ULL << 42);
        REQUIRE_MESSAGE(is_prime(n) == testing::naive_is_prime(n), n);
    }
}

TEST_CASE("Miller-Rabin near 2^64 and on strong pseudoprimes")
{
    CHECK(is_prime(18446744073709551557ULL));  // largest 64-bit prime
    CHECK_FALSE(is_prime(18446744073709551615ULL));
    CHECK_FALSE(is_prime(3215031751ULL));        // spsp to bases 2, 3, 5, 7
    CHECK_FALSE(is_prime(3825123056546413051ULL));  // spsp to bases up to 23
    CHECK_FALSE(is_prime(4294967297ULL));        // 641 * 6700417
    CHECK(is_prime(4294967291ULL));
}

TEST_CASE("PrimeNumber construction")
{
    CHECK(PrimeNumber(19).value() == 19);
    CHECK_THROWS_AS(PrimeNumber(1), std::invalid_argument);
    CHECK_THROWS_AS(PrimeNumber(91), std::invalid_argument);
    CHECK_THROWS_AS(PrimeNumber(Natural(2).pow(70)), std::invalid_argument);
    CHECK_FALSE(PrimeNumber::try_make(0).has_value());
    CHECK(PrimeNumber::try_make(7).has_value());
    CHECK(PrimeNumber(3) < PrimeNumber(5));
}

TEST_CASE("primes_up_to matches primality test")
{
    const auto ps = primes_up_to(10000);
    CHECK(ps.size() == 1229);
    std::uint64_t expected = 0;
    for (auto p : ps) {
        for (++expected; !testing::naive_is_prime(expected); ++expected) {
        }
        REQUIRE(p.value() == expected);
    }
    CHECK(primes_up_to(1).empty());
    CHECK(primes_up_to(2).size() == 1);
}

TEST_CASE("valuation")
{
    CHECK_THROWS_AS(valuation(PrimeNumber(2), 0), std::domain_error);
    CHECK(valuation(PrimeNumber(2), Natural(2).pow(200)) == 200);
    Gen g(0x5eed03);
    for (int i = 0; i < 5000; ++i) {
        const auto p = g.prime(50);
        const std::uint64_t n = g.uniform(1, 1ULL << 50);
        CHECK(valuation(p, n) == testing::naive_valuation(p.value(), n));
    }
}

TEST_CASE("base-p digits")
{
    const PrimeNumber five(5);
    CHECK(digits_base_p(five, 0).empty());
    const auto ds = digits_base_p(five, 2 + 3 * 5 + 4 * 125);
    REQUIRE(ds.size() == 4);
    CHECK(ds[0] == 2);
    CHECK(ds[1] == 3);
    CHECK(ds[2] == 0);
    CHECK(ds[3] == 4);
}

// Independent form: sum_i i c_i p^i = sum_{k>=1} (m - (m mod p^k)).
TEST_CASE("lambda_p against the telescoped form")
{
    Gen g(0x5eed04);
    for (int i = 0; i < 20000; ++i) {
        const auto p = g.prime(60);
        const std::uint64_t m = g.uniform(0, 1ULL << 40);
        std::uint64_t expected = 0;
        for (u128 pk = p.value(); pk <= m; pk *= p.value()) expected += m - static_cast<std::uint64_t>(m % pk);
        REQUIRE_MESSAGE(lambda_p(p, m) == expected, "p=" << p.value() << " m=" << m);
    }
    CHECK(lambda_p(PrimeNumber(3), 9) == 18);
    CHECK(lambda_p(PrimeNumber(2), 7) == 2 * 1 + 4 * 2);
}

TEST_CASE("lambda_p identities")
{
    for (auto p : primes_up_to(50)) {
        for (std::uint64_t m = 0; m <= 2500; ++m) {
            const Natural lam = lambda_p(p, m);
            REQUIRE(lam.is_zero() == (m < p.value()));
            if (m >= 1) REQUIRE(lam + Natural(p.value()) >= Natural(m) + 1);
        }
    }
}

TEST_CASE("real cyclotomic degree")
{
    const PrimeNumber two(2), three(3), seven(7);
    CHECK(real_cyclotomic_degree(two, 0) == 1);
    CHECK(real_cyclotomic_degree(two, 1) == 1);
    CHECK(real_cyclotomic_degree(two, 2) == 1);
    CHECK(real_cyclotomic_degree(two, 3) == 2);
    CHECK(real_cyclotomic_degree(two, 4) == 4);
    CHECK(real_cyclotomic_degree(three, 1) == 1);
    CHECK(real_cyclotomic_degree(three, 2) == 3);
    CHECK(real_cyclotomic_degree(seven, 1) == 3);
    CHECK(real_cyclotomic_degree(seven, 2) == 21);
    // phi(p^r)/2 by counting units for small p^r
    for (auto p : primes_up_to(30)) {
        std::uint64_t q = 1;
        for (std::uint64_t r = 1; q * p.value() < 5000; ++r) {
            q *= p.value();
            std::uint64_t units = 0;
            for (std::uint64_t a = 1; a < q; ++a) units += a % p.value() != 0;
            const std::uint64_t expected = std::max<std::uint64_t>(1, units / 2);
            CHECK_MESSAGE(real_cyclotomic_degree(p, r) == expected, "p=" << p.value() << " r=" << r);
        }
    }
}

TEST_CASE("trial factorization")
{
    const auto f = factor_by_trial_division(Natural(2).pow(9) * 3 * 3 * 1000003, 1000);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].first == PrimeNumber(2));
    CHECK(f.factors[0].second == 9);
    CHECK(f.factors[1].first == PrimeNumber(3));
    CHECK(f.factors[1].second == 2);
    CHECK(f.cofactor == 1000003);
    CHECK(factor_by_trial_division(1, 10).factors.empty());
    Gen g(0x5eed05);
    for (int i = 0; i < 500; ++i) {
        const std::uint64_t n = g.uniform(1, 1'000'000);
        const auto t = factor_by_trial_division(n, 1000);
        Natural back = t.cofactor;
        for (const auto& [p, e] : t.factors) back *= p.natural().pow(e.to_u64());
        CHECK(back == n);
        CHECK((t.cofactor == 1 || is_prime(t.cofactor.to_u64())));
    }
}

}
