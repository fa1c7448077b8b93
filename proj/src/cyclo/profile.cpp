#include "rmcond/arith.hpp"
#include "rmcond/cyclo.hpp"

#include <cctype>

namespace rmcond {

ExponentProfile::ExponentProfile(std::initializer_list<std::pair<std::uint64_t, std::uint64_t>> entries)
{
    for (auto [p, e] : entries) {
        PrimeNumber prime(p);
        if (contains(prime)) throw std::invalid_argument("repeated prime " + std::to_string(p) + " in profile");
        set(prime, e);
    }
}

void ExponentProfile::set(PrimeNumber p, Natural e)
{
    if (e.is_zero()) throw std::invalid_argument("profile exponents must be at least 1");
    entries_[p] = std::move(e);
}

Natural ExponentProfile::exponent(PrimeNumber p) const
{
    auto it = entries_.find(p);
    return it == entries_.end() ? Natural{} : it->second;
}

ExponentProfile ExponentProfile::without(PrimeNumber p) const
{
    ExponentProfile out = *this;
    out.erase(p);
    return out;
}

std::string ExponentProfile::str() const
{
    if (entries_.empty()) return "1";
    std::string out;
    for (const auto& [p, e] : entries_) {
        if (!out.empty()) out += '*';
        out += std::to_string(p.value());
        if (e != 1) out += "^" + e.str();
    }
    return out;
}

Natural ExponentProfile::level() const
{
    Natural n = 1;
    for (const auto& [p, e] : entries_) n *= p.natural().pow(e.to_u64());
    return n;
}

namespace {

class ProfileParser {
public:
    explicit ProfileParser(std::string_view text) : text_(text) {}

    ExponentProfile parse()
    {
        ExponentProfile profile;
        skip_space();
        if (at_end()) return profile;
        while (true) {
            skip_space();
            const std::size_t term_start = pos_;
            Natural p = number("prime");
            Natural e = 1;
            skip_space();
            if (!at_end() && text_[pos_] == '^') {
                ++pos_;
                skip_space();
                const std::size_t exponent_start = pos_;
                e = number("exponent");
                if (e.is_zero()) throw ProfileParseError(exponent_start, "exponent must be at least 1");
            }
            if (!p.fits_u64() || !is_prime(p.to_u64())) {
                throw ProfileParseError(term_start, p.str() + " is not a prime");
            }
            PrimeNumber prime(p);
            if (profile.contains(prime)) throw ProfileParseError(term_start, "repeated prime " + p.str());
            profile.set(prime, e);
            skip_space();
            if (at_end()) break;
            if (text_[pos_] != ',') throw ProfileParseError(pos_, std::string("unexpected character '") + text_[pos_] + "'");
            ++pos_;
        }
        return profile;
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }

    void skip_space()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    Natural number(const char* what)
    {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) throw ProfileParseError(start, std::string("expected ") + what);
        return Natural::parse(text_.substr(start, pos_ - start));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

ExponentProfile parse_profile(std::string_view text) { return ProfileParser(text).parse(); }

ExponentProfile profile_of_level(const Natural& n, std::uint64_t prime_bound)
{
    if (n.is_zero()) throw std::invalid_argument("level must be at least 1");
    auto fact = factor_by_trial_division(n, prime_bound);
    ExponentProfile profile;
    for (auto& [p, e] : fact.factors) profile.set(p, e);
    if (fact.cofactor != 1) {
        if (!fact.cofactor.fits_u64() || !is_prime(fact.cofactor.to_u64())) {
            throw std::invalid_argument("could not factor " + n.str() + ": cofactor " + fact.cofactor.str() +
                                        " has no prime factor below " + std::to_string(prime_bound));
        }
        profile.set(PrimeNumber(fact.cofactor), 1);
    }
    return profile;
}

}  // namespace rmcond
