#include "rmcond/cli/json_io.hpp"

#include <stdexcept>

namespace rmcond::json_io {

namespace {

const Json& member(const Json& j, const char* key)
{
    if (!j.is_object()) throw std::invalid_argument(std::string("expected an object holding '") + key + "'");
    auto it = j.find(key);
    if (it == j.end()) throw std::invalid_argument(std::string("missing member '") + key + "'");
    return *it;
}

std::string string_member(const Json& j, const char* key)
{
    const Json& v = member(j, key);
    if (!v.is_string()) throw std::invalid_argument(std::string("member '") + key + "' must be a string");
    return v.get<std::string>();
}

bool bool_member(const Json& j, const char* key)
{
    const Json& v = member(j, key);
    if (!v.is_boolean()) throw std::invalid_argument(std::string("member '") + key + "' must be a boolean");
    return v.get<bool>();
}

std::uint64_t u64_member(const Json& j, const char* key) { return decode_natural(member(j, key)).to_u64(); }

PrimeNumber prime_member(const Json& j, const char* key) { return PrimeNumber(decode_natural(member(j, key))); }

template <typename T, typename F>
std::optional<T> optional_member(const Json& j, const char* key, F decode)
{
    auto it = j.find(key);
    if (it == j.end() || it->is_null()) return std::nullopt;
    return decode(*it);
}

template <typename T>
Json encode_optional(const std::optional<T>& v)
{
    return v ? encode(*v) : Json(nullptr);
}

}  // namespace

Json encode(const Natural& n)
{
    if (n.fits_u64()) return Json(n.to_u64());
    return Json(n.str());
}

Natural decode_natural(const Json& j)
{
    if (j.is_number_unsigned()) return Natural(j.get<std::uint64_t>());
    if (j.is_string()) return Natural::parse(j.get<std::string>());
    throw std::invalid_argument("expected a non-negative integer, got " + j.dump());
}

Json encode(const BoundTriple& b)
{
    return Json{{"p", b.p.value()}, {"d", encode(b.d)}, {"bk", encode(b.bk)}, {"bk_prime", encode(b.bk_prime)},
                {"b0", encode(b.b0)}};
}

BoundTriple decode_bound_triple(const Json& j)
{
    return BoundTriple{prime_member(j, "p"), decode_natural(member(j, "d")), decode_natural(member(j, "bk")),
                       decode_natural(member(j, "bk_prime")), decode_natural(member(j, "b0"))};
}

Json encode(const TableCell& c)
{
    Json j = encode(c.bounds);
    j["sharpness"] = to_string(c.sharpness);
    j["display"] = c.display(false);
    return j;
}

TableCell decode_table_cell(const Json& j)
{
    return TableCell{decode_bound_triple(j), sharpness_from_string(string_member(j, "sharpness"))};
}

Json encode(const BoundTable& t)
{
    Json primes = Json::array();
    for (auto p : t.primes) primes.push_back(p.value());
    Json rows = Json::array();
    for (std::size_t r = 0; r < t.dims.size(); ++r) {
        Json cells = Json::array();
        for (const auto& cell : t.cells[r]) cells.push_back(cell ? encode(*cell) : Json(nullptr));
        rows.push_back(Json{{"d", t.dims[r]}, {"cells", std::move(cells)}});
    }
    return Json{{"primes", std::move(primes)}, {"rows", std::move(rows)}};
}

BoundTable decode_table(const Json& j)
{
    BoundTable t;
    for (const auto& p : member(j, "primes")) t.primes.emplace_back(decode_natural(p));
    for (const auto& row : member(j, "rows")) {
        t.dims.push_back(u64_member(row, "d"));
        auto& cells = t.cells.emplace_back();
        for (const auto& c : member(row, "cells")) {
            if (c.is_null()) {
                cells.emplace_back();
            } else {
                cells.emplace_back(decode_table_cell(c));
            }
        }
        if (cells.size() != t.primes.size()) throw std::invalid_argument("table row width mismatch");
    }
    return t;
}

Json encode(const ExponentProfile& p)
{
    Json arr = Json::array();
    for (const auto& [prime, e] : p.entries()) arr.push_back(Json{{"p", prime.value()}, {"e", encode(e)}});
    return arr;
}

ExponentProfile decode_profile(const Json& j)
{
    if (!j.is_array()) throw std::invalid_argument("profile must be an array");
    ExponentProfile p;
    for (const auto& entry : j) {
        PrimeNumber prime = prime_member(entry, "p");
        if (p.contains(prime)) throw std::invalid_argument("repeated prime in profile");
        p.set(prime, decode_natural(member(entry, "e")));
    }
    return p;
}

Json encode(const RealCyclotomicField& f)
{
    return Json{{"p", f.p.value()},
                {"r", encode(f.r)},
                {"conductor", encode(f.conductor())},
                {"degree", encode(f.degree)},
                {"name", f.name()}};
}

RealCyclotomicField decode_field(const Json& j)
{
    auto f = RealCyclotomicField::make(prime_member(j, "p"), decode_natural(member(j, "r")));
    if (!f) throw std::invalid_argument("field component must be nontrivial");
    if (f->degree != decode_natural(member(j, "degree"))) throw std::invalid_argument("field degree mismatch");
    return *f;
}

Json encode(const Compositum& c)
{
    Json comps = Json::array();
    for (const auto& f : c.components()) comps.push_back(encode(f));
    return Json{{"name", c.name()}, {"degree", encode(c.degree())}, {"components", std::move(comps)}};
}

Compositum decode_compositum(const Json& j)
{
    Compositum c;
    for (const auto& f : member(j, "components")) c.add(decode_field(f));
    return c;
}

Json encode(const RmConstraintReport& r)
{
    Json refined = Json::array();
    for (const auto& [q, b] : r.refined_bounds) refined.push_back(Json{{"p", q.value()}, {"max_exponent", encode(b)}});
    return Json{{"profile", encode(r.profile)},
                {"dimension", encode(r.dimension)},
                {"admissible", r.admissible},
                {"determination", to_string(r.determination)},
                {"forced", encode(r.forced)},
                {"residual_degree", encode_optional(r.residual_degree)},
                {"refined_bounds", std::move(refined)}};
}

RmConstraintReport decode_report(const Json& j)
{
    RmConstraintReport r;
    r.profile = decode_profile(member(j, "profile"));
    r.dimension = decode_natural(member(j, "dimension"));
    r.admissible = bool_member(j, "admissible");
    r.determination = determination_from_string(string_member(j, "determination"));
    r.forced = decode_compositum(member(j, "forced"));
    r.residual_degree = optional_member<Natural>(j, "residual_degree", decode_natural);
    for (const auto& b : member(j, "refined_bounds")) {
        r.refined_bounds.emplace(prime_member(b, "p"), decode_natural(member(b, "max_exponent")));
    }
    return r;
}

Json encode(const LocalTypeVerdict& v)
{
    return Json{{"type", to_string(v.type)}, {"justification", v.justification}};
}

LocalTypeVerdict decode_local_type(const Json& j)
{
    return LocalTypeVerdict{local_type_from_string(string_member(j, "type")), string_member(j, "justification")};
}

Json encode(const Genus2Report& g)
{
    return Json{{"conductor", encode(g.conductor)},
                {"simplicity", to_string(g.simplicity)},
                {"deciding_prime", g.deciding_prime ? Json(g.deciding_prime->value()) : Json(nullptr)},
                {"field", encode_optional(g.field)},
                {"rm_report", encode_optional(g.rm_report)}};
}

Genus2Report decode_genus2(const Json& j)
{
    Genus2Report g;
    g.conductor = decode_profile(member(j, "conductor"));
    g.simplicity = simplicity_from_string(string_member(j, "simplicity"));
    g.deciding_prime =
        optional_member<PrimeNumber>(j, "deciding_prime", [](const Json& v) { return PrimeNumber(decode_natural(v)); });
    g.field = optional_member<RealCyclotomicField>(j, "field", decode_field);
    g.rm_report = optional_member<RmConstraintReport>(j, "rm_report", decode_report);
    return g;
}

Json encode(const lmfdb::LevelQueryResult& r)
{
    Json records = Json::array();
    for (const auto& rec : r.records) {
        records.push_back(Json{{"level", encode(rec.level)},
                               {"weight", rec.weight},
                               {"char_trivial", rec.char_trivial},
                               {"dim", encode(rec.dim)}});
    }
    return Json{{"level", encode(r.level)},
                {"source", to_string(r.source)},
                {"fetched_at", r.fetched_at},
                {"complete", r.complete},
                {"records", std::move(records)}};
}

lmfdb::LevelQueryResult decode_level_result(const Json& j)
{
    lmfdb::LevelQueryResult r;
    r.level = decode_natural(member(j, "level"));
    r.source = lmfdb::data_source_from_string(string_member(j, "source"));
    r.fetched_at = string_member(j, "fetched_at");
    r.complete = bool_member(j, "complete");
    for (const auto& rec : member(j, "records")) {
        r.records.push_back({decode_natural(member(rec, "level")), static_cast<unsigned>(u64_member(rec, "weight")),
                             bool_member(rec, "char_trivial"), decode_natural(member(rec, "dim"))});
    }
    return r;
}

Json encode(const lmfdb::SharpnessWitness& w)
{
    return Json{{"p", w.p.value()},
                {"d", encode(w.d)},
                {"bound", encode(w.bound)},
                {"status", to_string(w.status)},
                {"exponent_attained", encode_optional(w.exponent_attained)},
                {"level", encode_optional(w.level)},
                {"level_budget", encode(w.level_budget)},
                {"levels_examined", w.levels_examined},
                {"levels_inconclusive", w.levels_inconclusive}};
}

lmfdb::SharpnessWitness decode_witness(const Json& j)
{
    return lmfdb::SharpnessWitness{prime_member(j, "p"),
                                   decode_natural(member(j, "d")),
                                   decode_natural(member(j, "bound")),
                                   lmfdb::witness_status_from_string(string_member(j, "status")),
                                   optional_member<Natural>(j, "exponent_attained", decode_natural),
                                   optional_member<Natural>(j, "level", decode_natural),
                                   decode_natural(member(j, "level_budget")),
                                   u64_member(j, "levels_examined"),
                                   u64_member(j, "levels_inconclusive")};
}

Json encode(const PropertyResult& r)
{
    return Json{{"name", r.name}, {"passed", r.passed}, {"cases", r.cases}, {"counterexample", r.counterexample}};
}

PropertyResult decode_property_result(const Json& j)
{
    return PropertyResult{string_member(j, "name"), bool_member(j, "passed"), u64_member(j, "cases"),
                          string_member(j, "counterexample")};
}

}  // namespace rmcond::json_io
