#pragma once

#include "rmcond/bounds.hpp"
#include "rmcond/cli/verify.hpp"
#include "rmcond/cyclo.hpp"
#include "rmcond/lmfdb/records.hpp"
#include "rmcond/lmfdb/sharpness.hpp"
#include "rmcond/table.hpp"

#include <optional>
#include <string>
#include <vector>

// Text renderings of command results. Every function returns complete
// output ending in a newline; json output is one document built solely from
// the json_io encodings so it decodes back into the domain types.
namespace rmcond::cli {

enum class OutputFormat { plain_text, csv, json };

std::string to_string(OutputFormat f);
// Accepts "text" (alias "plain_text"), "csv", "json".
OutputFormat output_format_from_string(const std::string& s);

// RFC 4180 field quoting.
std::string csv_field(const std::string& s);

std::string render_bound(const BoundTriple& b, const std::optional<Natural>& gl2_cap, OutputFormat f);
std::string render_table(const BoundTable& t, OutputFormat f);
std::string render_report(const RmConstraintReport& r, OutputFormat f);

struct ForbiddenListing {
    Natural dimension;
    ForbiddenOptions options;
    std::vector<ExponentProfile> profiles;
};
std::string render_forbidden(const ForbiddenListing& l, OutputFormat f);

std::string render_genus2(const Genus2Report& g, OutputFormat f);
std::string render_local_type(PrimeNumber p, const Natural& e, const LocalTypeVerdict& v, OutputFormat f);
std::string render_witness(const lmfdb::SharpnessWitness& w, OutputFormat f);
std::string render_level(const lmfdb::LevelQueryResult& r, OutputFormat f);
std::string render_verify(const std::vector<PropertyResult>& results, OutputFormat f);

}  // namespace rmcond::cli
