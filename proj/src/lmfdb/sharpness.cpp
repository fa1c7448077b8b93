#include "rmcond/lmfdb/sharpness.hpp"

#include "rmcond/bounds.hpp"

namespace rmcond::lmfdb {

std::string to_string(WitnessStatus s)
{
    switch (s) {
    case WitnessStatus::sharp: return "sharp";
    case WitnessStatus::almost_sharp: return "almost_sharp";
    case WitnessStatus::none_found: break;
    }
    return "none_found";
}

WitnessStatus witness_status_from_string(const std::string& s)
{
    if (s == "sharp") return WitnessStatus::sharp;
    if (s == "almost_sharp") return WitnessStatus::almost_sharp;
    if (s == "none_found") return WitnessStatus::none_found;
    throw std::invalid_argument("unknown witness status '" + s + "'");
}

SharpnessWitness sharpness_scan(OrbitRepository& repo, PrimeNumber p, const Natural& d, const Natural& level_budget,
                                const ScanOptions& options)
{
    SharpnessWitness w{p, d, b0_bound(p, d), WitnessStatus::none_found, std::nullopt, std::nullopt, level_budget, 0, 0};
    const Natural prime = p.natural();

    auto scan_exponent = [&](const Natural& e) {
        const Natural prime_power = prime.pow(e.to_u64());
        if (prime_power > level_budget) return false;
        const Natural max_cofactor = level_budget / prime_power;
        for (Natural m = 1; m <= max_cofactor; m += 1) {
            if (prime.divides(m)) continue;
            const Natural level = prime_power * m;
            ++w.levels_examined;
            if (options.on_level) options.on_level({p, d, e, level, w.levels_examined});
            LevelQueryResult result;
            try {
                result = repo.fetch_orbit_dims(level);
            } catch (const LevelNotServed&) {
                ++w.levels_inconclusive;
                continue;
            } catch (const NetworkUnavailable&) {
                if (!options.skip_unavailable) throw;
                ++w.levels_inconclusive;
                continue;
            }
            if (result.has_dim(d)) {
                w.level = level;
                w.exponent_attained = e;
                return true;
            }
            if (!result.complete) ++w.levels_inconclusive;
        }
        return false;
    };

    if (scan_exponent(w.bound)) {
        w.status = WitnessStatus::sharp;
    } else if (w.bound > 2 && scan_exponent(w.bound - 1)) {
        w.status = WitnessStatus::almost_sharp;
    }
    return w;
}

WitnessTable annotate_table(OrbitRepository& repo, std::uint64_t d_max, const Natural& level_budget,
                            const ScanOptions& options)
{
    WitnessTable out;
    for (std::uint64_t d = 1; d <= d_max; ++d) {
        for (auto p : primes_up_to(2 * d + 1)) {
            out.emplace(std::pair{p.value(), d}, sharpness_scan(repo, p, d, level_budget, options));
        }
    }
    return out;
}

SharpnessMap to_sharpness_map(const WitnessTable& witnesses)
{
    SharpnessMap out;
    for (const auto& [key, w] : witnesses) {
        Sharpness s = Sharpness::unknown;
        if (w.status == WitnessStatus::sharp) s = Sharpness::sharp;
        if (w.status == WitnessStatus::almost_sharp) s = Sharpness::almost_sharp;
        out.emplace(key, s);
    }
    return out;
}

}  // namespace rmcond::lmfdb
