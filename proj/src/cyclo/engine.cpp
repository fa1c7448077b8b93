#include "rmcond/bounds.hpp"
#include "rmcond/cyclo.hpp"

namespace rmcond {

std::string to_string(Determination d)
{
    switch (d) {
    case Determination::ExactField: return "ExactField";
    case Determination::ContainsSubfield: return "ContainsSubfield";
    case Determination::NoConstraint: return "NoConstraint";
    case Determination::Inadmissible: return "Inadmissible";
    }
    return "NoConstraint";
}

Determination determination_from_string(const std::string& s)
{
    if (s == "ExactField") return Determination::ExactField;
    if (s == "ContainsSubfield") return Determination::ContainsSubfield;
    if (s == "NoConstraint") return Determination::NoConstraint;
    if (s == "Inadmissible") return Determination::Inadmissible;
    throw std::invalid_argument("unknown determination '" + s + "'");
}

RmConstraintReport analyze_profile(const ExponentProfile& profile, const Natural& d)
{
    if (d.is_zero()) throw std::invalid_argument("dimension must be at least 1");

    RmConstraintReport report;
    report.profile = profile;
    report.dimension = d;
    report.forced = forced_compositum(profile);

    const Natural degree = report.forced.degree();
    report.admissible = degree.divides(d);
    if (!report.admissible) {
        report.determination = Determination::Inadmissible;
    } else {
        report.residual_degree = d / degree;
        if (report.forced.trivial()) {
            report.determination = Determination::NoConstraint;
        } else if (degree == d) {
            report.determination = Determination::ExactField;
        } else {
            report.determination = Determination::ContainsSubfield;
        }
    }

    for (const auto& [q, e] : profile.entries()) {
        const Natural others = forced_compositum(profile.without(q)).degree();
        if (others.divides(d)) report.refined_bounds.emplace(q, b0_bound(q, d / others));
    }
    return report;
}

Natural max_exponent_given(PrimeNumber p, const Natural& d, const ExponentProfile& partial)
{
    if (d.is_zero()) throw std::invalid_argument("dimension must be at least 1");
    if (partial.contains(p)) {
        throw std::invalid_argument(std::to_string(p.value()) + " already appears in the partial profile");
    }
    const Natural degree = forced_compositum(partial).degree();
    if (!degree.divides(d)) {
        throw std::invalid_argument("partial profile " + partial.str() + " is inadmissible in dimension " + d.str());
    }
    return b0_bound(p, d / degree);
}

}  // namespace rmcond
