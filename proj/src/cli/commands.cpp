#include "rmcond/cli/commands.hpp"

#include "rmcond/arith.hpp"
#include "rmcond/bounds.hpp"
#include "rmcond/cli/render.hpp"
#include "rmcond/cli/verify.hpp"
#include "rmcond/cyclo.hpp"
#include "rmcond/lmfdb/cache.hpp"
#include "rmcond/lmfdb/client.hpp"
#include "rmcond/lmfdb/repository.hpp"
#include "rmcond/lmfdb/sharpness.hpp"
#include "rmcond/table.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace rmcond::cli {

namespace {

// Thrown for bad arguments that CLI11 cannot catch on its own.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

Natural parse_natural_arg(const std::string& s, const char* what)
{
    try {
        return Natural::parse(s);
    } catch (const std::invalid_argument&) {
        throw UsageError(std::string(what) + ": expected a nonnegative integer, got '" + s + "'");
    }
}

Natural positive_arg(const std::string& s, const char* what)
{
    Natural n = parse_natural_arg(s, what);
    if (n.is_zero()) throw UsageError(std::string(what) + " must be at least 1");
    return n;
}

PrimeNumber prime_arg(const std::string& s)
{
    const Natural n = parse_natural_arg(s, "--p");
    auto p = n.fits_u64() ? PrimeNumber::try_make(n.to_u64()) : std::nullopt;
    if (!p) throw UsageError("--p: " + s + " is not prime");
    return *p;
}

std::filesystem::path default_cache_path(const EnvLookup& env)
{
    if (auto xdg = env("XDG_CACHE_HOME"); xdg && !xdg->empty()) return std::filesystem::path(*xdg) / "rmcond/orbits.jsonl";
    if (auto home = env("HOME"); home && !home->empty()) return std::filesystem::path(*home) / ".cache/rmcond/orbits.jsonl";
    return "rmcond-orbits.jsonl";
}

lmfdb::ApiConfig api_config_for(const DataSettings& s)
{
    lmfdb::ApiConfig config = s.api_config ? lmfdb::load_api_config(*s.api_config) : lmfdb::ApiConfig{};
    if (!s.base_url.empty()) config.base_url = s.base_url;
    return config;
}

struct DataContext {
    DataSettings settings;
    lmfdb::ApiConfig config;
    std::shared_ptr<lmfdb::OrbitCache> cache;

    lmfdb::OrbitRepository repository(bool offline) const
    {
        std::unique_ptr<lmfdb::LmfdbClient> client;
        if (!offline) {
            client = std::make_unique<lmfdb::LmfdbClient>(config,
                                                          lmfdb::make_http_transport(config.base_url, config.timeout));
        }
        return lmfdb::OrbitRepository(lmfdb::builtin_fixtures(), cache, std::move(client), config.max_served_level);
    }
};

DataContext open_data(const DataSettings& s, const EnvLookup& env, std::ostream& err)
{
    DataContext ctx{s, api_config_for(s), nullptr};
    ctx.cache = std::make_shared<lmfdb::OrbitCache>(s.cache_path.value_or(default_cache_path(env)));
    if (ctx.cache->skipped_lines())
        err << "warning: skipped " << ctx.cache->skipped_lines() << " malformed line(s) in " << ctx.cache->path().string()
            << "\n";
    return ctx;
}

// Runs `scan` online; if the service turns out to be unreachable, reports
// it once and reruns offline so that stored data still yields a result.
template <class Scan>
auto scan_with_fallback(const DataContext& ctx, bool verbose, std::ostream& err, Scan scan)
{
    lmfdb::ScanOptions options;
    if (verbose) {
        options.on_level = [&err](const lmfdb::ScanProgress& pr) {
            if (pr.examined % 1000 == 0)
                err << "p=" << pr.p.value() << " d=" << pr.d << " e=" << pr.exponent << " level " << pr.level << "\n";
        };
    }
    if (!ctx.settings.offline) {
        try {
            auto repo = ctx.repository(false);
            return scan(repo, options);
        } catch (const lmfdb::NetworkUnavailable& e) {
            err << "warning: " << e.what() << "; continuing with fixtures and cache only\n";
        }
    }
    auto repo = ctx.repository(true);
    options.skip_unavailable = true;
    return scan(repo, options);
}

}  // namespace

DataSettings resolve_data_settings(DataSettings flags, const EnvLookup& env)
{
    if (auto url = env("RMCOND_LMFDB_URL"); url && !url->empty()) flags.base_url = *url;
    if (auto cache = env("RMCOND_CACHE"); cache && !cache->empty()) flags.cache_path = std::filesystem::path(*cache);
    return flags;
}

std::optional<std::string> process_env(const char* name)
{
    if (const char* v = std::getenv(name)) return std::string(v);
    return std::nullopt;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err, const EnvLookup& env)
{
    CLI::App app{"Conductor-exponent bounds for modular abelian varieties with maximal real multiplication", "rmcond"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format_name = "text";
    std::string cache_flag;
    std::string base_url_flag;
    std::string api_config_flag;
    bool offline = false;
    bool verbose = false;
    app.add_option("--format", format_name, "Output format: text, csv or json")
        ->check(CLI::IsMember({"text", "plain_text", "csv", "json"}));
    app.add_option("--cache", cache_flag, "Orbit cache file (JSON lines); env RMCOND_CACHE overrides");
    app.add_option("--base-url", base_url_flag, "LMFDB base URL; env RMCOND_LMFDB_URL overrides");
    app.add_option("--api-config", api_config_flag, "JSON file overriding API endpoint and field names");
    app.add_flag("--offline", offline, "Use fixtures and cache only");
    app.add_flag("-v,--verbose", verbose, "Report scan progress on stderr");

    std::string p_arg, d_arg, e_arg, level_arg, budget_arg = "10000";

    auto* bound = app.add_subcommand("bound", "Brumer-Kramer bounds and B0 at one (p, d)");
    bool gl2 = false;
    bound->add_option("--p", p_arg, "Prime")->required();
    bound->add_option("--d", d_arg, "Dimension")->required();
    bound->add_flag("--gl2", gl2, "Also print the exponent cap for simple GL(2)-type varieties");

    auto* table = app.add_subcommand("table", "Table of B'(p,d) with B0(p,d) where smaller");
    std::uint64_t d_max = 10, p_max = 19;
    bool full = false, annotate = false;
    table->add_option("--dmax", d_max, "Largest dimension")->check(CLI::PositiveNumber);
    table->add_option("--pmax", p_max, "Largest prime");
    table->add_flag("--full", full, "Include cells with p > 2d + 1");
    table->add_flag("--annotate", annotate, "Mark cells whose bound is attained by an LMFDB orbit");
    table->add_option("--budget", budget_arg, "Largest level examined when annotating");

    auto* profile = app.add_subcommand("profile", "Forced rationality field and admissibility of a level profile");
    std::string spec_arg;
    profile->add_option("--d", d_arg, "Dimension")->required();
    auto* spec_opt = profile->add_option("spec", spec_arg, "Profile such as \"2^9,3^6\"");
    auto* level_opt = profile->add_option("--level", level_arg, "Level N, factored into its profile");
    spec_opt->excludes(level_opt);

    auto* forbidden = app.add_subcommand("forbidden", "Minimal forbidden level profiles in dimension d");
    ForbiddenOptions fopts;
    forbidden->add_option("--d", d_arg, "Dimension")->required();
    forbidden->add_option("--pbound", fopts.prime_bound, "Largest prime considered");
    forbidden->add_option("--max-entries", fopts.max_entries, "Largest number of primes per profile")
        ->check(CLI::PositiveNumber);
    forbidden->add_flag("--singletons", fopts.include_singletons, "Also list single-prime profiles p^(B0+1)");

    auto* genus2 = app.add_subcommand("genus2", "End^0 of a genus-2 Jacobian with RM from its conductor");
    genus2->add_option("spec", spec_arg, "Conductor profile such as \"5^6\"");
    auto* g2_level = genus2->add_option("--level", level_arg, "Conductor, factored into its profile");

    auto* local = app.add_subcommand("local-type", "Local type at p forced by v_p(N) = e");
    bool contains = false;
    local->add_option("--p", p_arg, "Prime")->required();
    local->add_option("--e", e_arg, "Exponent v_p(N)")->required();
    auto* contains_opt = local->add_flag("--contains", contains, "K_f contains the test field Q(zeta_{3^m})^+");
    auto* degree_opt = local->add_option("--degree", d_arg, "Decide containment from [K_f : Q] instead");
    contains_opt->excludes(degree_opt);

    auto* sharp = app.add_subcommand("sharpness", "Search LMFDB for an orbit attaining B0(p,d)");
    sharp->add_option("--p", p_arg, "Prime")->required();
    sharp->add_option("--d", d_arg, "Dimension")->required();
    sharp->add_option("--budget", budget_arg, "Largest level examined");

    auto* fetch = app.add_subcommand("fetch", "Orbit degrees of weight-2 trivial-character newforms at a level");
    fetch->add_option("--level", level_arg, "Level")->required();

    auto* verify = app.add_subcommand("verify", "Exhaustive check of the bound identities and inequalities");
    VerifyOptions vopts;
    verify->add_option("--pmax", vopts.p_max, "Largest prime");
    verify->add_option("--dmax", vopts.d_max, "Largest dimension")->check(CLI::PositiveNumber);
    verify->add_option("--mmax", vopts.m_max, "Range of m for the lambda_p identities");
    verify->add_option("--emax", vopts.e_max, "Exponent scan for the forced-subfield characterization");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        if (auto* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front())
            err << sub->help();
        return exit_usage;
    }

    try {
        const OutputFormat fmt = output_format_from_string(format_name);
        DataSettings flags;
        if (!cache_flag.empty()) flags.cache_path = std::filesystem::path(cache_flag);
        flags.base_url = base_url_flag;
        flags.offline = offline;
        if (!api_config_flag.empty()) flags.api_config = std::filesystem::path(api_config_flag);
        const DataSettings data = resolve_data_settings(flags, env);

        auto profile_input = [&](CLI::Option* level_option) {
            if (level_option->count()) return profile_of_level(positive_arg(level_arg, "--level"));
            if (spec_arg.empty()) throw UsageError("give a profile such as \"2^9,3^6\" or --level N");
            return parse_profile(spec_arg);
        };

        if (bound->parsed()) {
            const auto p = prime_arg(p_arg);
            const auto d = positive_arg(d_arg, "--d");
            out << render_bound(bound_triple(p, d), gl2 ? std::optional<Natural>(b0_gl2_bound(p, d)) : std::nullopt,
                                fmt);
        } else if (table->parsed()) {
            SharpnessMap marks;
            if (annotate) {
                const Natural budget = parse_natural_arg(budget_arg, "--budget");
                const DataContext ctx = open_data(data, env, err);
                const auto witnesses =
                    scan_with_fallback(ctx, verbose, err, [&](lmfdb::OrbitRepository& repo, const lmfdb::ScanOptions& o) {
                        return lmfdb::annotate_table(repo, d_max, budget, o);
                    });
                marks = lmfdb::to_sharpness_map(witnesses);
            }
            out << render_table(rmcond::render_table(d_max, p_max, annotate ? &marks : nullptr, full), fmt);
        } else if (profile->parsed()) {
            const auto d = positive_arg(d_arg, "--d");
            out << render_report(analyze_profile(profile_input(level_opt), d), fmt);
        } else if (forbidden->parsed()) {
            const auto d = positive_arg(d_arg, "--d");
            out << render_forbidden({d, fopts, enumerate_forbidden(d, fopts)}, fmt);
        } else if (genus2->parsed()) {
            out << render_genus2(genus2_rm_analysis(profile_input(g2_level)), fmt);
        } else if (local->parsed()) {
            const auto p = prime_arg(p_arg);
            const auto e = positive_arg(e_arg, "--e");
            const auto verdict = degree_opt->count()
                                     ? classify_local_type_for_degree(p, e, positive_arg(d_arg, "--degree"))
                                     : classify_local_type(p, e, contains);
            out << render_local_type(p, e, verdict, fmt);
        } else if (sharp->parsed()) {
            const auto p = prime_arg(p_arg);
            const auto d = positive_arg(d_arg, "--d");
            const Natural budget = parse_natural_arg(budget_arg, "--budget");
            const DataContext ctx = open_data(data, env, err);
            out << render_witness(
                scan_with_fallback(ctx, verbose, err,
                                   [&](lmfdb::OrbitRepository& repo, const lmfdb::ScanOptions& o) {
                                       return lmfdb::sharpness_scan(repo, p, d, budget, o);
                                   }),
                fmt);
        } else if (fetch->parsed()) {
            const auto level = positive_arg(level_arg, "--level");
            const DataContext ctx = open_data(data, env, err);
            auto repo = ctx.repository(data.offline);
            out << render_level(repo.fetch_orbit_dims(level), fmt);
        } else if (verify->parsed()) {
            const auto results = verify_properties(vopts);
            out << render_verify(results, fmt);
            const bool ok = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
            return ok ? exit_ok : exit_verify_failed;
        }
        return exit_ok;
    } catch (const lmfdb::LmfdbError& e) {
        err << "error: " << e.what() << "\n";
        return exit_data_error;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_data_error;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
}

}  // namespace rmcond::cli
