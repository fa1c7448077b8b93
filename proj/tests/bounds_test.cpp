#include "rmcond/arith.hpp"
#include "rmcond/bounds.hpp"
#include "rmcond/table.hpp"
#include "support/gen.hpp"
#include "support/oracle.hpp"

#include <doctest.h>

#include <map>
#include <stdexcept>

using namespace rmcond;
using namespace rmcond::testing;

namespace {

// B'(p,d) with B0(p,d) when smaller, d = 1..10 and p = 2..19, p <= 2d + 1.
const std::map<std::pair<int, int>, std::pair<int, int>> known_cells = {
    {{1, 2}, {8, 8}},    {{1, 3}, {5, 5}},
    {{2, 2}, {10, 10}},  {{2, 3}, {5, 5}},   {{2, 5}, {4, 4}},
    {{3, 2}, {9, 8}},    {{3, 3}, {7, 7}},   {{3, 5}, {3, 2}},  {{3, 7}, {4, 4}},
    {{4, 2}, {12, 12}},  {{4, 3}, {6, 5}},   {{4, 5}, {4, 4}},  {{4, 7}, {3, 2}},
    {{5, 2}, {11, 8}},   {{5, 3}, {6, 5}},   {{5, 5}, {4, 2}},  {{5, 7}, {3, 2}},  {{5, 11}, {4, 4}},
    {{6, 2}, {11, 10}},  {{6, 3}, {7, 7}},   {{6, 5}, {4, 4}},  {{6, 7}, {4, 4}},  {{6, 11}, {3, 2}},
    {{6, 13}, {4, 4}},
    {{7, 2}, {10, 8}},   {{7, 3}, {6, 5}},   {{7, 5}, {4, 2}},  {{7, 7}, {4, 2}},  {{7, 11}, {3, 2}},
    {{7, 13}, {3, 2}},
    {{8, 2}, {14, 14}},  {{8, 3}, {6, 5}},   {{8, 5}, {4, 4}},  {{8, 7}, {3, 2}},  {{8, 11}, {3, 2}},
    {{8, 13}, {3, 2}},   {{8, 17}, {4, 4}},
    {{9, 2}, {13, 8}},   {{9, 3}, {9, 9}},   {{9, 5}, {4, 2}},  {{9, 7}, {4, 4}},  {{9, 11}, {3, 2}},
    {{9, 13}, {3, 2}},   {{9, 17}, {3, 2}},  {{9, 19}, {4, 4}},
    {{10, 2}, {13, 10}}, {{10, 3}, {8, 5}},  {{10, 5}, {6, 6}}, {{10, 7}, {4, 2}}, {{10, 11}, {4, 4}},
    {{10, 13}, {3, 2}},  {{10, 17}, {3, 2}}, {{10, 19}, {3, 2}},
};

}  // namespace

TEST_SUITE("bounds") {

TEST_CASE("bounds agree with the machine-integer oracle")
{
    for (auto p : primes_up_to(1000)) {
        for (std::uint64_t d = 1; d <= 100; ++d) {
            const std::uint64_t bk = oracle_bk(p.value(), d);
            REQUIRE(bk_bound(p, d) == bk);
            REQUIRE(bk_prime_bound(p, d) == bk / d);
        }
    }
}

TEST_CASE("B0 agrees with the forced-subfield scan")
{
    for (auto p : primes_up_to(200)) {
        for (std::uint64_t d = 1; d <= 64; ++d) {
            REQUIRE_MESSAGE(b0_bound(p, d) == oracle_b0(p.value(), d), "p=" << p.value() << " d=" << d);
        }
    }
}

TEST_CASE("B0 closed form on random large inputs")
{
    Gen g(0x5eed11);
    for (int i = 0; i < 5000; ++i) {
        const auto p = g.prime(5000);
        const std::uint64_t d = g.uniform(1, 1'000'000);
        std::uint64_t expected = 2;
        if (p.value() == 2) expected = 8 + 2 * naive_valuation(2, d);
        else if (p.value() == 3) expected = 5 + 2 * naive_valuation(3, d);
        else if ((2 * d) % (p.value() - 1) == 0) expected = 4 + 2 * naive_valuation(p.value(), d);
        REQUIRE(b0_bound(p, d) == expected);
        REQUIRE(b0_bound(p, d) <= bk_prime_bound(p, d));
    }
}

TEST_CASE("known table values")
{
    for (const auto& [key, val] : known_cells) {
        const auto [d, p] = key;
        CAPTURE(d);
        CAPTURE(p);
        CHECK(bk_prime_bound(PrimeNumber(p), d) == val.first);
        CHECK(b0_bound(PrimeNumber(p), d) == val.second);
    }
}

TEST_CASE("targeted values")
{
    CHECK(bk_prime_bound(PrimeNumber(2), 8) == 14);
    CHECK(bk_prime_bound(PrimeNumber(3), 9) == 9);
    CHECK(bk_prime_bound(PrimeNumber(5), 10) == 6);
    CHECK(b0_bound(PrimeNumber(3), 10) == 5);
    CHECK(b0_bound(PrimeNumber(2), 5) == 8);
    CHECK(bk_bound(PrimeNumber(11), 1) == 2);
    CHECK(bk_prime_bound(PrimeNumber(11), 1) == 2);
    CHECK(b0_bound(PrimeNumber(23), 4) == 2);
    CHECK(bk_prime_bound(PrimeNumber(23), 4) == 2);
    CHECK(bk_bound(PrimeNumber(3), 9) == 81);
}

TEST_CASE("GL(2)-type cap")
{
    CHECK(b0_gl2_bound(PrimeNumber(2), 1) == 9);
    for (auto p : primes_up_to(100)) {
        for (std::uint64_t d = 1; d <= 30; ++d) {
            CHECK(b0_gl2_bound(p, d) == b0_bound(p, d) + (p.value() == 2 ? 1 : 0));
        }
    }
}

TEST_CASE("forced subfield exponent")
{
    for (auto p : primes_up_to(100)) {
        for (std::uint64_t e = 0; e <= 80; ++e) {
            REQUIRE(forced_subfield_exponent(p, e) == oracle_forced_r(p.value(), e));
        }
    }
    CHECK(forced_subfield_exponent(PrimeNumber(2), 8) == 0);
    CHECK(forced_subfield_exponent(PrimeNumber(2), 9) == 3);
    CHECK(forced_subfield_exponent(PrimeNumber(3), 6) == 2);
    CHECK(forced_subfield_exponent(PrimeNumber(5), 3) == 1);
    CHECK(forced_subfield_exponent(PrimeNumber(5), 2) == 0);
}

TEST_CASE("bound triple")
{
    const auto t = bound_triple(PrimeNumber(3), 9);
    CHECK(t.bk == 81);
    CHECK(t.bk_prime == 9);
    CHECK(t.b0 == 9);
    CHECK_THROWS_AS(bound_triple(PrimeNumber(3), 0), std::invalid_argument);
    CHECK_THROWS_AS(bk_bound(PrimeNumber(3), 0), std::invalid_argument);
}

TEST_CASE("table layout")
{
    const auto t = render_table(10, 19);
    CHECK(t.dims.size() == 10);
    REQUIRE(t.primes.size() == 8);
    for (std::uint64_t d = 1; d <= 10; ++d) {
        for (auto p : t.primes) {
            const auto& c = t.at(d, p.value());
            CHECK(c.has_value() == (p.value() <= 2 * d + 1));
            if (c) {
                const auto& known = known_cells.at({static_cast<int>(d), static_cast<int>(p.value())});
                CHECK(c->bounds.bk_prime == known.first);
                CHECK(c->bounds.b0 == known.second);
            }
        }
    }
    CHECK(t.at(5, 2)->display() == "11 (8)");
    CHECK(t.at(9, 3)->display() == "9");
    const auto full = render_table(3, 7, nullptr, true);
    CHECK(full.at(1, 7).has_value());
    CHECK(full.at(1, 7)->display() == "2");
}

TEST_CASE("sharpness marks")
{
    SharpnessMap marks{{{2, 7}, Sharpness::sharp}, {{3, 9}, Sharpness::sharp}, {{19, 9}, Sharpness::almost_sharp}};
    const auto t = render_table(10, 19, &marks);
    CHECK(t.at(7, 2)->display() == "10 (8!)");
    CHECK(t.at(9, 3)->display() == "9!");
    CHECK(t.at(9, 19)->display() == "4*");
    CHECK(t.at(9, 19)->display(false) == "4");
    CHECK(t.at(1, 2)->sharpness == Sharpness::unknown);
    for (auto s : {Sharpness::sharp, Sharpness::almost_sharp, Sharpness::unknown})
        CHECK(sharpness_from_string(to_string(s)) == s);
    CHECK_THROWS_AS(sharpness_from_string("bold"), std::invalid_argument);
}

}
