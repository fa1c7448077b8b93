#include "rmcond/arith.hpp"
#include "rmcond/bounds.hpp"
#include "rmcond/cyclo.hpp"

#include <algorithm>
#include <functional>
#include <tuple>

namespace rmcond {

namespace {

// Smallest exponent at which the forced degree first takes a given value.
struct Level {
    Natural exponent;
    Natural degree;
};

struct Candidate {
    PrimeNumber p;
    std::vector<Level> levels;  // nontrivial levels whose degree divides d, ascending
};

Natural forced_degree(PrimeNumber p, const Natural& e)
{
    return real_cyclotomic_degree(p, forced_subfield_exponent(p, e));
}

std::vector<Level> admissible_levels(PrimeNumber p, const Natural& d)
{
    std::vector<Level> levels;
    Natural previous = 1;
    const Natural cap = b0_bound(p, d);
    for (Natural e = 1; e <= cap; e += 1) {
        Natural deg = forced_degree(p, e);
        if (deg != previous) levels.push_back({e, deg});
        previous = deg;
    }
    return levels;
}

}  // namespace

std::vector<ExponentProfile> enumerate_forbidden(const Natural& d, const ForbiddenOptions& options)
{
    if (d.is_zero()) throw std::invalid_argument("dimension must be at least 1");

    std::vector<ExponentProfile> out;
    const auto primes = primes_up_to(options.prime_bound);

    if (options.include_singletons && options.max_entries >= 1) {
        for (auto p : primes) {
            ExponentProfile single;
            single.set(p, b0_bound(p, d) + 1);
            out.push_back(std::move(single));
        }
    }

    std::vector<Candidate> candidates;
    for (auto p : primes) {
        auto levels = admissible_levels(p, d);
        if (!levels.empty()) candidates.push_back({p, std::move(levels)});
    }

    // chosen[i] = (candidate index, level index)
    std::vector<std::pair<std::size_t, std::size_t>> chosen;

    auto degree_of = [&](std::size_t skip, bool lower) {
        Natural deg = 1;
        for (std::size_t i = 0; i < chosen.size(); ++i) {
            auto [c, l] = chosen[i];
            if (i == skip) {
                if (!lower || l == 0) continue;
                --l;
            }
            deg *= candidates[c].levels[l].degree;
        }
        return deg;
    };

    auto test_minimal = [&] {
        if (degree_of(chosen.size(), false).divides(d)) return;
        for (std::size_t i = 0; i < chosen.size(); ++i) {
            if (!degree_of(i, true).divides(d)) return;
        }
        ExponentProfile profile;
        for (auto [c, l] : chosen) profile.set(candidates[c].p, candidates[c].levels[l].exponent);
        out.push_back(std::move(profile));
    };

    std::function<void(std::size_t, std::size_t)> extend = [&](std::size_t first, std::size_t target) {
        if (chosen.size() == target) {
            test_minimal();
            return;
        }
        for (std::size_t c = first; c < candidates.size(); ++c) {
            for (std::size_t l = 0; l < candidates[c].levels.size(); ++l) {
                chosen.emplace_back(c, l);
                extend(c + 1, target);
                chosen.pop_back();
            }
        }
    };
    for (std::size_t k = 2; k <= options.max_entries && k <= candidates.size(); ++k) extend(0, k);

    std::sort(out.begin(), out.end(), [](const ExponentProfile& a, const ExponentProfile& b) {
        return std::forward_as_tuple(a.size(), a) < std::forward_as_tuple(b.size(), b);
    });
    return out;
}

}  // namespace rmcond
