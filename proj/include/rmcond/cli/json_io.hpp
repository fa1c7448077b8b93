#pragma once

#include "rmcond/bounds.hpp"
#include "rmcond/cli/verify.hpp"
#include "rmcond/cyclo.hpp"
#include "rmcond/lmfdb/records.hpp"
#include "rmcond/lmfdb/sharpness.hpp"
#include "rmcond/table.hpp"

#include <json.hpp>

#include <vector>

// JSON encodings of the domain types as emitted by `rmcond --format json`.
// Every encode has a matching decode; decode throws std::invalid_argument on
// schema mismatch. Schemas are documented in docs/json-schemas.md.
namespace rmcond::json_io {

using Json = nlohmann::ordered_json;

// Integers that fit in 64 bits are emitted as numbers, larger ones as decimal strings.
Json encode(const Natural& n);
Json encode(const BoundTriple& b);
Json encode(const TableCell& c);
Json encode(const BoundTable& t);
Json encode(const ExponentProfile& p);
Json encode(const RealCyclotomicField& f);
Json encode(const Compositum& c);
Json encode(const RmConstraintReport& r);
Json encode(const LocalTypeVerdict& v);
Json encode(const Genus2Report& g);
Json encode(const lmfdb::LevelQueryResult& r);
Json encode(const lmfdb::SharpnessWitness& w);
Json encode(const PropertyResult& r);

Natural decode_natural(const Json& j);
BoundTriple decode_bound_triple(const Json& j);
TableCell decode_table_cell(const Json& j);
BoundTable decode_table(const Json& j);
ExponentProfile decode_profile(const Json& j);
RealCyclotomicField decode_field(const Json& j);
Compositum decode_compositum(const Json& j);
RmConstraintReport decode_report(const Json& j);
LocalTypeVerdict decode_local_type(const Json& j);
Genus2Report decode_genus2(const Json& j);
lmfdb::LevelQueryResult decode_level_result(const Json& j);
lmfdb::SharpnessWitness decode_witness(const Json& j);
PropertyResult decode_property_result(const Json& j);

}  // namespace rmcond::json_io
