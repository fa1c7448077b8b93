#include "rmcond/bounds.hpp"
#include "rmcond/cyclo.hpp"

namespace rmcond {

std::string to_string(LocalType t)
{
    switch (t) {
    case LocalType::SupercuspidalDihedralFromQ3SqrtMinus3: return "SupercuspidalDihedralFromQ3SqrtMinus3";
    case LocalType::SupercuspidalRequired: return "SupercuspidalRequired";
    case LocalType::Unconstrained: break;
    }
    return "Unconstrained";
}

LocalType local_type_from_string(const std::string& s)
{
    if (s == "SupercuspidalDihedralFromQ3SqrtMinus3") return LocalType::SupercuspidalDihedralFromQ3SqrtMinus3;
    if (s == "SupercuspidalRequired") return LocalType::SupercuspidalRequired;
    if (s == "Unconstrained") return LocalType::Unconstrained;
    throw std::invalid_argument("unknown local type '" + s + "'");
}

namespace {

bool odd_at_least_three(const Natural& e) { return e >= 3 && !Natural(2).divides(e); }

std::string test_field_name(const Natural& e)
{
    // Q(zeta_{3^m})^+ with e = 2m + 1
    const Natural m = (e - 1) / 2;
    return "Q(zeta_" + Natural(3).pow(m.to_u64()).str() + ")^+";
}

}  // namespace

std::optional<RealCyclotomicField> local_type_test_field(PrimeNumber p, const Natural& e)
{
    if (p.value() != 3 || !odd_at_least_three(e)) return std::nullopt;
    return RealCyclotomicField::make(p, (e - 1) / 2);
}

LocalTypeVerdict classify_local_type(PrimeNumber p, const Natural& e, bool contains_test_field)
{
    if (e.is_zero()) throw std::invalid_argument("conductor exponent must be at least 1");
    const std::string where = "v_" + std::to_string(p.value()) + "(N) = " + e.str();
    if (!odd_at_least_three(e)) {
        return {LocalType::Unconstrained, where + " is not an odd exponent >= 3; no parity obstruction"};
    }
    if (p.value() == 3 && !contains_test_field) {
        return {LocalType::SupercuspidalDihedralFromQ3SqrtMinus3,
                where + " is odd and K_f does not contain " + test_field_name(e) +
                    ": the local component is dihedral supercuspidal, induced from Q_3(sqrt(-3))"};
    }
    return {LocalType::SupercuspidalRequired,
            where + " is odd and >= 3: principal series and twisted Steinberg are excluded, so the local "
                    "component is supercuspidal"};
}

LocalTypeVerdict classify_local_type_for_degree(PrimeNumber p, const Natural& e, const Natural& degree)
{
    if (degree.is_zero()) throw std::invalid_argument("orbit degree must be at least 1");
    auto field = local_type_test_field(p, e);
    // Without a field label containment can only be ruled out, never confirmed.
    const bool may_contain = !field || field->degree.divides(degree);
    return classify_local_type(p, e, may_contain);
}

}  // namespace rmcond
