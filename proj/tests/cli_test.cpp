#include "rmcond/cli/commands.hpp"
#include "rmcond/cli/json_io.hpp"
#include "rmcond/cli/render.hpp"
#include "rmcond/lmfdb/cache.hpp"
#include "support/gen.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

using namespace rmcond;
using namespace rmcond::cli;
using json_io::Json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

// Runs the CLI with an empty environment plus `env`.
Run run(std::vector<std::string> args, std::map<std::string, std::string> env = {})
{
    args.insert(args.begin(), "rmcond");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const EnvLookup lookup = [&env](const char* name) -> std::optional<std::string> {
        if (auto it = env.find(name); it != env.end()) return it->second;
        return std::nullopt;
    };
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err, lookup);
    return {code, out.str(), err.str()};
}

// Isolated cache location so tests never touch the user's cache.
std::map<std::string, std::string> scratch_env()
{
    const auto dir = std::filesystem::temp_directory_path() / ("rmcond-cli-" + std::to_string(::getpid()));
    return {{"RMCOND_CACHE", (dir / "orbits.jsonl").string()}};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("bound command")
{
    auto r = run({"bound", "--p", "3", "--d", "9"});
    CHECK(r.code == exit_ok);
    CHECK(r.out.find("B0 = 9 ") != std::string::npos);

    r = run({"bound", "--p", "2", "--d", "1", "--gl2", "--format", "json"});
    CHECK(r.code == exit_ok);
    const auto j = Json::parse(r.out);
    CHECK(j.at("gl2_cap") == 9);
    CHECK(json_io::decode_bound_triple(j) == bound_triple(PrimeNumber(2), 1));

    r = run({"bound", "--p", "23", "--d", "4", "--format", "csv"});
    CHECK(r.out == "p,d,B,Bp,B0\n23,4,8,2,2\n");
}

TEST_CASE("usage errors")
{
    CHECK(run({"bound", "--p", "4", "--d", "1"}).code == exit_usage);
    CHECK(run({"bound", "--p", "3", "--d", "0"}).code == exit_usage);
    CHECK(run({"bound", "--p", "3"}).code == exit_usage);
    CHECK(run({"bound", "--p", "x", "--d", "1"}).code == exit_usage);
    CHECK(run({}).code == exit_usage);
    CHECK(run({"frobnicate"}).code == exit_usage);
    CHECK(run({"table", "--format", "xml"}).code == exit_usage);
    const auto bad = run({"profile", "--d", "3", "3^x"});
    CHECK(bad.code == exit_usage);
    CHECK(bad.err.find("position 2") != std::string::npos);
    CHECK(bad.out.empty());
    CHECK(run({"genus2", "5^7"}).code == exit_usage);
    CHECK(run({"--help"}).code == exit_ok);
}

TEST_CASE("table csv layout")
{
    const auto r = run({"table", "--dmax", "3", "--pmax", "7", "--format", "csv"});
    CHECK(r.code == exit_ok);
    CHECK(r.out ==
          "d,Bp_2,B0_2,status_2,Bp_3,B0_3,status_3,Bp_5,B0_5,status_5,Bp_7,B0_7,status_7\n"
          "1,8,8,unknown,5,5,unknown,,,,,,\n"
          "2,10,10,unknown,5,5,unknown,4,4,unknown,,,\n"
          "3,9,8,unknown,7,7,unknown,3,2,unknown,4,4,unknown\n");
}

TEST_CASE("table text")
{
    const auto r = run({"table", "--dmax", "3", "--pmax", "7"});
    CHECK(r.out ==
          "d\\p  2      3  5      7\n"
          "  1  8      5\n"
          "  2  10     5  4\n"
          "  3  9 (8)  7  3 (2)  4\n");
}

TEST_CASE("profile command")
{
    auto r = run({"profile", "--d", "6", "2^9,3^6"});
    CHECK(r.code == exit_ok);
    CHECK(r.out.find("Q(sqrt(2), zeta_9 + zeta_9^-1)") != std::string::npos);
    CHECK(r.out.find("ExactField") != std::string::npos);

    r = run({"profile", "--d", "2", "2^9,5^3", "--format", "json"});
    CHECK(r.code == exit_ok);  // inadmissible is a result, not an error
    CHECK(json_io::decode_report(Json::parse(r.out)) == analyze_profile(parse_profile("2^9,5^3"), 2));

    r = run({"profile", "--d", "3", "--level", "19683"});
    CHECK(r.out.find("Inadmissible") != std::string::npos);
    CHECK(run({"profile", "--d", "3"}).code == exit_usage);
}

TEST_CASE("forbidden command")
{
    const auto r = run({"forbidden", "--d", "6", "--format", "json"});
    CHECK(r.code == exit_ok);
    const auto j = Json::parse(r.out);
    std::vector<ExponentProfile> got;
    for (const auto& p : j.at("profiles")) got.push_back(json_io::decode_profile(p));
    CHECK(got == enumerate_forbidden(6));
    CHECK(run({"forbidden", "--d", "2", "--format", "csv"}).out == "profile,entries,forced_degree\n2^9*5^3,2,4\n");
}

TEST_CASE("genus2, local-type, fetch, sharpness")
{
    auto r = run({"genus2", "5^6", "--format", "json"});
    CHECK(json_io::decode_genus2(Json::parse(r.out)) == genus2_rm_analysis(ExponentProfile{{5, 6}}));

    r = run({"local-type", "--p", "3", "--e", "5", "--format", "json"});
    const auto lt = Json::parse(r.out);
    CHECK(lt.at("p") == 3);
    CHECK(json_io::decode_local_type(lt) == classify_local_type(PrimeNumber(3), 5, false));
    CHECK(run({"local-type", "--p", "3", "--e", "5", "--contains", "--degree", "2"}).code == exit_usage);

    const auto env = scratch_env();
    r = run({"--offline", "fetch", "--level", "243", "--format", "json"}, env);
    CHECK(r.code == exit_ok);
    const auto level = json_io::decode_level_result(Json::parse(r.out));
    CHECK(level.dims() == std::vector<Natural>{1, 1, 2, 2, 3, 3});
    CHECK(level.source == lmfdb::DataSource::fixture);
    CHECK(run({"fetch", "--offline", "--level", "101"}, env).code == exit_data_error);

    r = run({"sharpness", "--offline", "--p", "11", "--d", "10", "--budget", "20000", "--format", "json"}, env);
    CHECK(r.code == exit_ok);
    const auto w = json_io::decode_witness(Json::parse(r.out));
    CHECK(w.status == lmfdb::WitnessStatus::almost_sharp);
    CHECK(w.level == 1331);
}

TEST_CASE("verify command")
{
    auto r = run({"verify", "--pmax", "19", "--dmax", "10"});
    CHECK(r.code == exit_ok);
    CHECK(r.out.find("PASS known table values") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
    r = run({"verify", "--pmax", "2", "--dmax", "1", "--format", "json"});
    CHECK(r.code == exit_ok);
    const auto j = Json::parse(r.out);
    CHECK(j.at("passed") == true);
    for (const auto& p : j.at("properties")) CHECK(json_io::decode_property_result(p).passed);
}

TEST_CASE("plain text output is byte-identical across runs")
{
    const auto env = scratch_env();
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"table"},
             {"profile", "--d", "4", "2^9,5^3"},
             {"forbidden", "--d", "12", "--max-entries", "3"},
             {"--offline", "table", "--annotate", "--budget", "5000"},
             {"verify", "--pmax", "30", "--dmax", "12"}}) {
        const auto a = run(args, env), b = run(args, env);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("environment overrides flags for URL and cache only")
{
    DataSettings flags;
    flags.base_url = "https://flag.example";
    flags.cache_path = "/flag/cache.jsonl";
    flags.offline = true;
    const auto none = resolve_data_settings(flags, [](const char*) { return std::nullopt; });
    CHECK(none.base_url == "https://flag.example");
    CHECK(*none.cache_path == "/flag/cache.jsonl");
    const auto env = resolve_data_settings(flags, [](const char* name) -> std::optional<std::string> {
        if (std::string(name) == "RMCOND_LMFDB_URL") return "https://env.example";
        if (std::string(name) == "RMCOND_CACHE") return "/env/cache.jsonl";
        return std::nullopt;
    });
    CHECK(env.base_url == "https://env.example");
    CHECK(*env.cache_path == "/env/cache.jsonl");
    CHECK(env.offline);
    const auto empty = resolve_data_settings(flags, [](const char*) -> std::optional<std::string> { return ""; });
    CHECK(empty.base_url == "https://flag.example");
}

TEST_CASE("csv quoting")
{
    CHECK(csv_field("plain") == "plain");
    CHECK(csv_field("a,b") == "\"a,b\"");
    CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
    for (auto f : {OutputFormat::plain_text, OutputFormat::csv, OutputFormat::json})
        CHECK(output_format_from_string(to_string(f)) == f);
}

TEST_CASE("json round-trips of every domain type")
{
    rmcond::testing::Gen g(0x5eed41);
    for (int i = 0; i < 300; ++i) {
        const auto p = g.prime(200);
        const auto d = g.uniform(1, 100);
        const auto t = bound_triple(p, d);
        CHECK(json_io::decode_bound_triple(Json::parse(json_io::encode(t).dump())) == t);

        ExponentProfile prof;
        for (std::uint64_t k = g.uniform(0, 4); k; --k) prof.set(g.prime(60), g.uniform(1, 14));
        CHECK(json_io::decode_profile(json_io::encode(prof)) == prof);
        const auto report = analyze_profile(prof, d);
        CHECK(json_io::decode_report(Json::parse(json_io::encode(report).dump())) == report);
        CHECK(json_io::decode_compositum(json_io::encode(report.forced)) == report.forced);
    }
    const Natural huge = Natural(10).pow(40) + 7;
    CHECK(json_io::encode(huge).is_string());
    CHECK(json_io::decode_natural(json_io::encode(huge)) == huge);

    SharpnessMap marks{{{2, 7}, Sharpness::sharp}, {{19, 9}, Sharpness::almost_sharp}};
    const auto table = rmcond::render_table(10, 19, &marks);
    const auto back = json_io::decode_table(Json::parse(json_io::encode(table).dump()));
    CHECK(back.dims == table.dims);
    CHECK(back.primes == table.primes);
    CHECK(back.cells == table.cells);

    for (auto pr : {PropertyResult{"x", true, 3, ""}, PropertyResult{"y", false, 9, "p=2"}})
        CHECK(json_io::decode_property_result(json_io::encode(pr)) == pr);

    CHECK_THROWS_AS(json_io::decode_bound_triple(Json::parse(R"({"p": 4, "d": 1})")), std::invalid_argument);
    CHECK_THROWS_AS(json_io::decode_natural(Json(-3)), std::invalid_argument);
    CHECK_THROWS_AS(json_io::decode_profile(Json::parse(R"([{"p": 2}])")), std::invalid_argument);
}

}
