#include "rmcond/arith.hpp"
#include "rmcond/bounds.hpp"
#include "rmcond/cyclo.hpp"

#include <algorithm>

namespace rmcond {

std::optional<RealCyclotomicField> RealCyclotomicField::make(PrimeNumber p, const Natural& r)
{
    Natural degree = real_cyclotomic_degree(p, r);
    if (degree == 1) return std::nullopt;
    return RealCyclotomicField{p, r, std::move(degree)};
}

std::string RealCyclotomicField::name() const
{
    if (degree == 2) return "Q(" + generator() + ")";
    return "Q(zeta_" + conductor().str() + ")^+";
}

std::string RealCyclotomicField::generator() const
{
    // The only quadratic ones are Q(zeta_8)^+ and Q(zeta_5)^+.
    if (degree == 2) return "sqrt(" + std::to_string(p.value()) + ")";
    const std::string m = conductor().str();
    return "zeta_" + m + " + zeta_" + m + "^-1";
}

void Compositum::add(const RealCyclotomicField& f)
{
    auto it = components_.begin();
    while (it != components_.end() && it->p < f.p) ++it;
    if (it != components_.end() && it->p == f.p) {
        throw std::invalid_argument("compositum already has a component at " + std::to_string(f.p.value()));
    }
    components_.insert(it, f);
}

Natural Compositum::degree() const
{
    Natural deg = 1;
    for (const auto& c : components_) deg *= c.degree;
    return deg;
}

std::string Compositum::name() const
{
    if (components_.empty()) return "Q";
    if (components_.size() == 1) return components_.front().name();
    // generators listed by degree, then prime: "Q(sqrt(5), zeta_9 + zeta_9^-1)"
    std::vector<const RealCyclotomicField*> order;
    for (const auto& f : components_) order.push_back(&f);
    std::stable_sort(order.begin(), order.end(), [](const auto* a, const auto* b) { return a->degree < b->degree; });
    std::string out = "Q(";
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (i) out += ", ";
        out += order[i]->generator();
    }
    return out + ")";
}

Compositum forced_compositum(const ExponentProfile& profile)
{
    Compositum c;
    for (const auto& [p, e] : profile.entries()) {
        if (auto f = RealCyclotomicField::make(p, forced_subfield_exponent(p, e))) c.add(*f);
    }
    return c;
}

}  // namespace rmcond
