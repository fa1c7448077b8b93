#include "rmcond/cli/render.hpp"

#include "rmcond/cli/json_io.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <stdexcept>

namespace rmcond::cli {

namespace {

using json_io::encode;
using json_io::Json;

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string join(const std::vector<std::string>& parts, const std::string& sep)
{
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

std::string csv_row(const std::vector<std::string>& fields)
{
    std::vector<std::string> quoted;
    quoted.reserve(fields.size());
    for (const auto& f : fields) quoted.push_back(csv_field(f));
    return join(quoted, ",") + "\n";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// "2:9;3:6"
std::string refined_bounds_field(const RmConstraintReport& r)
{
    std::vector<std::string> parts;
    for (const auto& [p, e] : r.refined_bounds) parts.push_back(fmt::format("{}:{}", p.value(), e.str()));
    return join(parts, ";");
}

std::string field_name(const std::optional<RealCyclotomicField>& f) { return f ? f->name() : ""; }

}  // namespace

std::string to_string(OutputFormat f)
{
    switch (f) {
    case OutputFormat::plain_text: return "text";
    case OutputFormat::csv: return "csv";
    case OutputFormat::json: return "json";
    }
    throw std::logic_error("bad OutputFormat");
}

OutputFormat output_format_from_string(const std::string& s)
{
    if (s == "text" || s == "plain_text") return OutputFormat::plain_text;
    if (s == "csv") return OutputFormat::csv;
    if (s == "json") return OutputFormat::json;
    throw std::invalid_argument("unknown output format '" + s + "'");
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string render_bound(const BoundTriple& b, const std::optional<Natural>& gl2_cap, OutputFormat f)
{
    switch (f) {
    case OutputFormat::json: {
        Json j = encode(b);
        if (gl2_cap) j["gl2_cap"] = encode(*gl2_cap);
        return dump(j);
    }
    case OutputFormat::csv: {
        std::vector<std::string> head{"p", "d", "B", "Bp", "B0"};
        std::vector<std::string> row{std::to_string(b.p.value()), b.d.str(), b.bk.str(), b.bk_prime.str(), b.b0.str()};
        if (gl2_cap) {
            head.push_back("gl2_cap");
            row.push_back(gl2_cap->str());
        }
        return csv_row(head) + csv_row(row);
    }
    case OutputFormat::plain_text: {
        std::string out = fmt::format("p = {}, d = {}\n", b.p.value(), b.d.str());
        out += fmt::format("  B  = {:<6} Brumer-Kramer bound on v_p of the conductor N^d\n", b.bk.str());
        out += fmt::format("  B' = {:<6} Brumer-Kramer bound on v_p(N), floor(B/d)\n", b.bk_prime.str());
        out += fmt::format("  B0 = {:<6} bound on v_p(N) under maximal real multiplication\n", b.b0.str());
        if (gl2_cap) out += fmt::format("  GL(2)-type exponent cap = {}\n", gl2_cap->str());
        return out;
    }
    }
    throw std::logic_error("bad OutputFormat");
}

std::string render_table(const BoundTable& t, OutputFormat f)
{
    switch (f) {
    case OutputFormat::json: return dump(encode(t));
    case OutputFormat::csv: {
        std::vector<std::string> head{"d"};
        for (auto p : t.primes) {
            head.push_back(fmt::format("Bp_{}", p.value()));
            head.push_back(fmt::format("B0_{}", p.value()));
            head.push_back(fmt::format("status_{}", p.value()));
        }
        std::string out = csv_row(head);
        for (std::size_t r = 0; r < t.dims.size(); ++r) {
            std::vector<std::string> row{std::to_string(t.dims[r])};
            for (const auto& c : t.cells[r]) {
                if (c) {
                    row.push_back(c->bounds.bk_prime.str());
                    row.push_back(c->bounds.b0.str());
                    row.push_back(to_string(c->sharpness));
                } else {
                    row.insert(row.end(), {"", "", ""});
                }
            }
            out += csv_row(row);
        }
        return out;
    }
    case OutputFormat::plain_text: {
        std::vector<std::vector<std::string>> grid;
        std::vector<std::string> head{"d\\p"};
        for (auto p : t.primes) head.push_back(std::to_string(p.value()));
        grid.push_back(head);
        for (std::size_t r = 0; r < t.dims.size(); ++r) {
            std::vector<std::string> row{std::to_string(t.dims[r])};
            for (const auto& c : t.cells[r]) row.push_back(c ? c->display(true) : "");
            grid.push_back(row);
        }
        std::vector<std::size_t> width(head.size(), 0);
        for (const auto& row : grid)
            for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
        std::string out;
        for (const auto& row : grid) {
            std::string line = fmt::format("{:>{}}", row[0], width[0]);
            for (std::size_t i = 1; i < row.size(); ++i) line += fmt::format("  {:<{}}", row[i], width[i]);
            while (!line.empty() && line.back() == ' ') line.pop_back();
            out += line + "\n";
        }
        return out;
    }
    }
    throw std::logic_error("bad OutputFormat");
}

std::string render_report(const RmConstraintReport& r, OutputFormat f)
{
    const std::string residual = r.residual_degree ? r.residual_degree->str() : "";
    switch (f) {
    case OutputFormat::json: return dump(encode(r));
    case OutputFormat::csv:
        return csv_row({"profile", "dimension", "admissible", "forced", "forced_degree", "determination",
                        "residual_degree", "refined_bounds"}) +
               csv_row({r.profile.str(), r.dimension.str(), r.admissible ? "true" : "false", r.forced.name(),
                        r.forced.degree().str(), to_string(r.determination), residual, refined_bounds_field(r)});
    case OutputFormat::plain_text: {
        std::string out;
        out += fmt::format("profile        {}\n", r.profile.str());
        out += fmt::format("dimension      {}\n", r.dimension.str());
        out += fmt::format("admissible     {}\n", yes_no(r.admissible));
        out += fmt::format("forced field   {} (degree {})\n", r.forced.name(), r.forced.degree().str());
        out += fmt::format("determination  {}\n", to_string(r.determination));
        if (r.residual_degree) out += fmt::format("residual       [K : forced field] = {}\n", residual);
        for (const auto& [p, e] : r.refined_bounds)
            out += fmt::format("refined bound  v_{}(N) <= {} given the other entries\n", p.value(), e.str());
        return out;
    }
    }
    throw std::logic_error("bad OutputFormat");
}

std::string render_forbidden(const ForbiddenListing& l, OutputFormat f)
{
    switch (f) {
    case OutputFormat::json: {
        Json profiles = Json::array();
        for (const auto& p : l.profiles) profiles.push_back(encode(p));
        return dump(Json{{"dimension", encode(l.dimension)},
                         {"prime_bound", l.options.prime_bound},
                         {"max_entries", l.options.max_entries},
                         {"include_singletons", l.options.include_singletons},
                         {"profiles", profiles}});
    }
    case OutputFormat::csv: {
        std::string out = csv_row({"profile", "entries", "forced_degree"});
        for (const auto& p : l.profiles)
            out += csv_row({p.str(), std::to_string(p.size()), forced_compositum(p).degree().str()});
        return out;
    }
    case OutputFormat::plain_text: {
        std::string out = fmt::format("minimal forbidden profiles, d = {}, primes <= {}, at most {} entries: {}\n",
                                      l.dimension.str(), l.options.prime_bound, l.options.max_entries,
                                      l.profiles.size());
        for (const auto& p : l.profiles)
            out += fmt::format("  {:<16} forced degree {}\n", p.str(), forced_compositum(p).degree().str());
        return out;
    }
    }
    throw std::logic_error("bad OutputFormat");
}

std::string render_genus2(const Genus2Report& g, OutputFormat f)
{
    const std::string deciding = g.deciding_prime ? std::to_string(g.deciding_prime->value()) : "";
    switch (f) {
    case OutputFormat::json: return dump(encode(g));
    case OutputFormat::csv:
        return csv_row({"conductor", "simplicity", "deciding_prime", "field"}) +
               csv_row({g.conductor.str(), to_string(g.simplicity), deciding, field_name(g.field)});
    case OutputFormat::plain_text: {
        std::string out = fmt::format("conductor      {}\n", g.conductor.str());
        if (g.deciding_prime) {
            out += fmt::format("simplicity     simple (v_{} exceeds twice the elliptic-curve bound)\n", deciding);
        } else {
            out += "simplicity     unknown (a product of elliptic curves is not excluded)\n";
        }
        if (g.rm_report) out += fmt::format("rm profile     {}\n", g.rm_report->profile.str());
        out += fmt::format("End^0(A)       {}\n", g.field ? g.field->name() : "inconclusive");
        return out;
    }
    }
    throw std::logic_error("bad OutputFormat");
}

std::string render_local_type(PrimeNumber p, const Natural& e, const LocalTypeVerdict& v, OutputFormat f)
{
    switch (f) {
    case OutputFormat::json: {
        Json j{{"p", p.value()}, {"e", encode(e)}};
        const Json verdict = encode(v);
        for (const auto& [k, val] : verdict.items()) j[k] = val;
        return dump(j);
    }
    case OutputFormat::csv:
        return csv_row({"p", "e", "type", "justification"}) +
               csv_row({std::to_string(p.value()), e.str(), to_string(v.type), v.justification});
    case OutputFormat::plain_text:
        return fmt::format("p = {}, v_p(N) = {}\ntype           {}\n               {}\n", p.value(), e.str(),
                           to_string(v.type), v.justification);
    }
    throw std::logic_error("bad OutputFormat");
}

std::string render_witness(const lmfdb::SharpnessWitness& w, OutputFormat f)
{
    const std::string exponent = w.exponent_attained ? w.exponent_attained->str() : "";
    const std::string level = w.level ? w.level->str() : "";
    switch (f) {
    case OutputFormat::json: return dump(encode(w));
    case OutputFormat::csv:
        return csv_row({"p", "d", "bound", "status", "exponent_attained", "level", "level_budget", "levels_examined",
                        "levels_inconclusive"}) +
               csv_row({std::to_string(w.p.value()), w.d.str(), w.bound.str(), to_string(w.status), exponent, level,
                        w.level_budget.str(), std::to_string(w.levels_examined),
                        std::to_string(w.levels_inconclusive)});
    case OutputFormat::plain_text: {
        std::string out = fmt::format("p = {}, d = {}, B0 = {}\n", w.p.value(), w.d.str(), w.bound.str());
        out += fmt::format("status         {}\n", to_string(w.status));
        if (w.level)
            out += fmt::format("witness        degree-{} orbit at level {} (v_p = {})\n", w.d.str(), level, exponent);
        out += fmt::format("levels         {} examined, {} inconclusive, budget {}\n", w.levels_examined,
                           w.levels_inconclusive, w.level_budget.str());
        return out;
    }
    }
    throw std::logic_error("bad OutputFormat");
}

std::string render_level(const lmfdb::LevelQueryResult& r, OutputFormat f)
{
    std::vector<std::string> dims;
    for (const auto& d : r.dims()) dims.push_back(d.str());
    switch (f) {
    case OutputFormat::json: return dump(encode(r));
    case OutputFormat::csv:
        return csv_row({"level", "source", "complete", "fetched_at", "dims"}) +
               csv_row({r.level.str(), lmfdb::to_string(r.source), r.complete ? "true" : "false", r.fetched_at,
                        join(dims, " ")});
    case OutputFormat::plain_text:
        return fmt::format("level {} ({}, {}): orbit degrees {}\n", r.level.str(), lmfdb::to_string(r.source),
                           r.complete ? "complete" : "partial", dims.empty() ? "none" : join(dims, " "));
    }
    throw std::logic_error("bad OutputFormat");
}

std::string render_verify(const std::vector<PropertyResult>& results, OutputFormat f)
{
    const bool all = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
    switch (f) {
    case OutputFormat::json: {
        Json props = Json::array();
        for (const auto& r : results) props.push_back(encode(r));
        return dump(Json{{"passed", all}, {"properties", props}});
    }
    case OutputFormat::csv: {
        std::string out = csv_row({"property", "passed", "cases", "counterexample"});
        for (const auto& r : results)
            out += csv_row({r.name, r.passed ? "true" : "false", std::to_string(r.cases), r.counterexample});
        return out;
    }
    case OutputFormat::plain_text: {
        std::string out;
        for (const auto& r : results) {
            out += fmt::format("{} {} ({} cases)\n", r.passed ? "PASS" : "FAIL", r.name, r.cases);
            if (!r.passed) out += fmt::format("     counterexample: {}\n", r.counterexample);
        }
        out += all ? "all properties hold\n" : "verification FAILED\n";
        return out;
    }
    }
    throw std::logic_error("bad OutputFormat");
}

}  // namespace rmcond::cli
