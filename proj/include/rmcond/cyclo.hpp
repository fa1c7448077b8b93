#pragma once

#include "rmcond/natural.hpp"
#include "rmcond/prime.hpp"

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rmcond {

// Prime-power local data of a level: distinct primes with exponents >= 1.
class ExponentProfile {
public:
    ExponentProfile() = default;
    ExponentProfile(std::initializer_list<std::pair<std::uint64_t, std::uint64_t>> entries);

    // Replaces any existing entry. Throws std::invalid_argument for e = 0.
    void set(PrimeNumber p, Natural e);
    void erase(PrimeNumber p) { entries_.erase(p); }

    bool contains(PrimeNumber p) const { return entries_.count(p) != 0; }
    // Exponent at p, 0 when absent.
    Natural exponent(PrimeNumber p) const;
    const std::map<PrimeNumber, Natural>& entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }

    ExponentProfile without(PrimeNumber p) const;
    // "2^9*5^3"; "1" for the empty profile.
    std::string str() const;
    // The integer prod p^e.
    Natural level() const;

    friend bool operator==(const ExponentProfile&, const ExponentProfile&) = default;
    friend auto operator<=>(const ExponentProfile& a, const ExponentProfile& b) { return a.entries_ <=> b.entries_; }

private:
    std::map<PrimeNumber, Natural> entries_;
};

class ProfileParseError : public std::invalid_argument {
public:
    ProfileParseError(std::size_t position, const std::string& what)
        : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position)
    {
    }
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// Comma-separated "p^e" terms, "^e" defaulting to 1; whitespace around
// terms is ignored.
ExponentProfile parse_profile(std::string_view text);

// Factors n by trial division up to prime_bound; throws std::invalid_argument
// if a cofactor is left that cannot be certified prime.
ExponentProfile profile_of_level(const Natural& n, std::uint64_t prime_bound = 1'000'000);

// Q(zeta_{p^r})^+ of degree > 1. Trivial fields are never materialized.
struct RealCyclotomicField {
    PrimeNumber p;
    Natural r;
    Natural degree;

    // Returns nullopt when the field is Q.
    static std::optional<RealCyclotomicField> make(PrimeNumber p, const Natural& r);

    Natural conductor() const { return p.natural().pow(r.to_u64()); }
    // "Q(sqrt(2))", "Q(zeta_9)^+"
    std::string name() const;
    // Generator used inside compositum names: "sqrt(5)", "zeta_9 + zeta_9^-1".
    std::string generator() const;

    friend bool operator==(const RealCyclotomicField&, const RealCyclotomicField&) = default;
};

// Compositum of real cyclotomic fields at pairwise distinct primes; these
// are linearly disjoint so the degree is the product.
class Compositum {
public:
    Compositum() = default;

    // Throws std::invalid_argument if a component at the same prime exists.
    void add(const RealCyclotomicField& f);

    const std::vector<RealCyclotomicField>& components() const noexcept { return components_; }
    Natural degree() const;
    bool trivial() const noexcept { return components_.empty(); }
    // "Q", "Q(zeta_13)^+", "Q(sqrt(2), sqrt(5))"; generators by degree, then prime
    std::string name() const;

    friend bool operator==(const Compositum&, const Compositum&) = default;

private:
    std::vector<RealCyclotomicField> components_;  // ascending prime
};

// Compositum of the fields Q(zeta_{p^{r_p}})^+ forced by each entry.
Compositum forced_compositum(const ExponentProfile& profile);

enum class Determination {
    ExactField,        // forced compositum has degree d: it is the whole field
    ContainsSubfield,  // nontrivial forced compositum of degree < d
    NoConstraint,      // nothing forced
    Inadmissible,      // forced degree does not divide d
};

std::string to_string(Determination d);
Determination determination_from_string(const std::string& s);

struct RmConstraintReport {
    ExponentProfile profile;
    Natural dimension;
    bool admissible = false;
    Compositum forced;
    Determination determination = Determination::NoConstraint;
    std::optional<Natural> residual_degree;  // d / forced degree, when admissible
    // For each q in the profile whose complement is admissible: the largest
    // v_q(N) compatible with the other entries.
    std::map<PrimeNumber, Natural> refined_bounds;

    friend bool operator==(const RmConstraintReport&, const RmConstraintReport&) = default;
};

// Throws std::invalid_argument for d = 0.
RmConstraintReport analyze_profile(const ExponentProfile& profile, const Natural& d);

// b0_bound(p, d / deg(partial)). Throws std::invalid_argument if p is in
// partial or partial is inadmissible for d.
Natural max_exponent_given(PrimeNumber p, const Natural& d, const ExponentProfile& partial);

struct ForbiddenOptions {
    std::uint64_t prime_bound = 19;
    std::size_t max_entries = 2;
    bool include_singletons = false;
};

// Minimal inadmissible profiles for dimension d: inadmissible, and lowering
// any single exponent by one (dropping the entry at exponent 1) gives an
// admissible profile. Sorted by size, then lexicographically.
std::vector<ExponentProfile> enumerate_forbidden(const Natural& d, const ForbiddenOptions& options = {});

enum class LocalType {
    SupercuspidalDihedralFromQ3SqrtMinus3,
    SupercuspidalRequired,
    Unconstrained,
};

std::string to_string(LocalType t);
LocalType local_type_from_string(const std::string& s);

struct LocalTypeVerdict {
    LocalType type = LocalType::Unconstrained;
    std::string justification;

    friend bool operator==(const LocalTypeVerdict&, const LocalTypeVerdict&) = default;
};

// The field whose containment in K_f separates the local types at p = 3 for
// odd e = 2m + 1 >= 3: Q(zeta_{3^m})^+. nullopt when no such test applies
// (p != 3, e even, e < 3) or when the field is Q (m = 1).
std::optional<RealCyclotomicField> local_type_test_field(PrimeNumber p, const Natural& e);

// `contains_test_field` answers whether K_f contains Q(zeta_{3^m})^+ with
// m = (e - 1) / 2; it is ignored unless p = 3 and e is odd. Throws for e = 0.
LocalTypeVerdict classify_local_type(PrimeNumber p, const Natural& e, bool contains_test_field);

// Same, deciding containment from the orbit degree alone: K_f cannot contain
// the test field when its degree does not divide [K_f : Q].
LocalTypeVerdict classify_local_type_for_degree(PrimeNumber p, const Natural& e, const Natural& degree);

enum class Simplicity { simple, unknown };

std::string to_string(Simplicity s);
Simplicity simplicity_from_string(const std::string& s);

struct Genus2Report {
    ExponentProfile conductor;
    Simplicity simplicity = Simplicity::unknown;
    std::optional<PrimeNumber> deciding_prime;  // a prime excluding a product of elliptic curves
    std::optional<RealCyclotomicField> field;   // End^0(A) when it is determined
    std::optional<RmConstraintReport> rm_report;  // dimension-2 analysis of the halved profile

    friend bool operator==(const Genus2Report&, const Genus2Report&) = default;
};

// Conductor profile of a genus-2 Jacobian assumed to have RM. Throws
// std::invalid_argument when simplicity is proven but an exponent is odd,
// or when the halved profile is inadmissible in dimension 2.
Genus2Report genus2_rm_analysis(const ExponentProfile& conductor);

}  // namespace rmcond
