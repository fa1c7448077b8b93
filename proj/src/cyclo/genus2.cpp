#include "rmcond/bounds.hpp"
#include "rmcond/cyclo.hpp"

namespace rmcond {

std::string to_string(Simplicity s) { return s == Simplicity::simple ? "simple" : "unknown"; }

Simplicity simplicity_from_string(const std::string& s)
{
    if (s == "simple") return Simplicity::simple;
    if (s == "unknown") return Simplicity::unknown;
    throw std::invalid_argument("unknown simplicity '" + s + "'");
}

Genus2Report genus2_rm_analysis(const ExponentProfile& conductor)
{
    Genus2Report report;
    report.conductor = conductor;

    // A product E1 x E2 has v_p(N) <= 2 B(p,1) everywhere.
    for (const auto& [p, e] : conductor.entries()) {
        if (e > Natural(2) * bk_bound(p, 1)) {
            report.deciding_prime = p;
            break;
        }
    }
    if (!report.deciding_prime) return report;
    report.simplicity = Simplicity::simple;

    // Simple with maximal RM: the conductor is N_f^2.
    ExponentProfile halved;
    for (const auto& [p, e] : conductor.entries()) {
        if (!Natural(2).divides(e)) {
            throw std::invalid_argument("simple RM surface must have square conductor, but v_" +
                                        std::to_string(p.value()) + " = " + e.str() + " is odd");
        }
        halved.set(p, e / 2);
    }

    auto rm = analyze_profile(halved, 2);
    if (!rm.admissible) {
        throw std::invalid_argument("conductor " + conductor.str() + " is impossible for a simple RM abelian surface");
    }
    if (rm.determination == Determination::ExactField) report.field = rm.forced.components().front();
    report.rm_report = std::move(rm);
    return report;
}

}  // namespace rmcond
