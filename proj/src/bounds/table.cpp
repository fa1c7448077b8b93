#include "rmcond/table.hpp"

#include <algorithm>
#include <stdexcept>

namespace rmcond {

std::string to_string(Sharpness s)
{
    switch (s) {
    case Sharpness::sharp: return "sharp";
    case Sharpness::almost_sharp: return "almost_sharp";
    case Sharpness::unknown: break;
    }
    return "unknown";
}

Sharpness sharpness_from_string(const std::string& s)
{
    if (s == "sharp") return Sharpness::sharp;
    if (s == "almost_sharp") return Sharpness::almost_sharp;
    if (s == "unknown") return Sharpness::unknown;
    throw std::invalid_argument("unknown sharpness flag '" + s + "'");
}

std::string TableCell::display(bool marks) const
{
    std::string mark;
    if (marks && sharpness == Sharpness::sharp) mark = "!";
    if (marks && sharpness == Sharpness::almost_sharp) mark = "*";
    if (!shows_b0()) return bounds.bk_prime.str() + mark;
    return bounds.bk_prime.str() + " (" + bounds.b0.str() + mark + ")";
}

const std::optional<TableCell>& BoundTable::at(std::uint64_t d, std::uint64_t p) const
{
    auto row = std::find(dims.begin(), dims.end(), d);
    auto col = std::find_if(primes.begin(), primes.end(), [p](PrimeNumber q) { return q.value() == p; });
    if (row == dims.end() || col == primes.end()) throw std::out_of_range("no such table cell");
    return cells[row - dims.begin()][col - primes.begin()];
}

BoundTable render_table(std::uint64_t d_max, std::uint64_t p_max, const SharpnessMap* sharpness, bool full)
{
    if (d_max == 0) throw std::invalid_argument("d_max must be at least 1");
    BoundTable table;
    table.primes = primes_up_to(p_max);
    for (std::uint64_t d = 1; d <= d_max; ++d) {
        table.dims.push_back(d);
        auto& row = table.cells.emplace_back();
        for (auto p : table.primes) {
            if (!full && p.value() > 2 * d + 1) {
                row.emplace_back();
                continue;
            }
            TableCell cell{bound_triple(p, d)};
            if (sharpness) {
                if (auto it = sharpness->find({p.value(), d}); it != sharpness->end()) cell.sharpness = it->second;
            }
            row.emplace_back(std::move(cell));
        }
    }
    return table;
}

}  // namespace rmcond
