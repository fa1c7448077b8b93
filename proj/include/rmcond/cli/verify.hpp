#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rmcond {

struct PropertyResult {
    std::string name;
    bool passed = true;
    std::uint64_t cases = 0;
    std::string counterexample;  // first failure, empty when passed

    friend bool operator==(const PropertyResult&, const PropertyResult&) = default;
};

struct VerifyOptions {
    std::uint64_t p_max = 1000;
    std::uint64_t d_max = 100;
    std::uint64_t m_max = 2500;  // range for the lambda_p identities
    std::uint64_t e_max = 40;    // exponent scan for the forced-subfield oracle
};

// Exhaustively checks every range-quantified property of the bound formulas,
// the lambda_p identities, the forced-subfield characterization of B0 and the
// single-prime admissibility boundary.
std::vector<PropertyResult> verify_properties(const VerifyOptions& options);

// Known values of B'(p,d) and B0(p,d) for d <= 10, p <= 19, p <= 2d + 1.
struct KnownCell {
    std::uint64_t d;
    std::uint64_t p;
    std::uint64_t bk_prime;
    std::uint64_t b0;
};
const std::vector<KnownCell>& known_table_values();

}  // namespace rmcond
