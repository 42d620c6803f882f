#include "exact_linear.hh"

#include <algorithm>
#include <functional>

namespace blstate::detail {

std::optional<AffineSpace> solve_affine(std::vector<Row> rows, std::size_t m)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t col = 0; col < m && r < rows.size(); ++col) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][col] == 0)
            ++p;
        if (p == rows.size())
            continue;
        std::swap(rows[r], rows[p]);
        const Rational inv = Rational(1) / rows[r][col];
        for (auto & v : rows[r])
            v *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][col] == 0)
                continue;
            const Rational f = rows[i][col];
            for (std::size_t j = col; j <= m; ++j)
                rows[i][j] -= f * rows[r][j];
        }
        pivots.push_back(col);
        ++r;
    }
    for (std::size_t i = r; i < rows.size(); ++i)
        if (rows[i][m] != 0)
            return std::nullopt;

    std::vector<bool> is_pivot(m, false);
    for (auto c : pivots)
        is_pivot[c] = true;
    AffineSpace out;
    out.particular.assign(m, Rational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i)
        out.particular[pivots[i]] = rows[i][m];
    for (std::size_t f = 0; f < m; ++f) {
        if (is_pivot[f])
            continue;
        Row v(m, Rational(0));
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -rows[i][f];
        out.basis.push_back(std::move(v));
    }
    return out;
}

std::vector<Row> vertices(const AffineSpace & space, const std::vector<Bound> & bounds, bool first_only)
{
    const auto m = space.particular.size();
    const auto d = space.basis.size();

    auto point = [&](const Row & t) {
        Row x = space.particular;
        for (std::size_t k = 0; k < d; ++k)
            if (t[k] != 0)
                for (std::size_t j = 0; j < m; ++j)
                    x[j] += t[k] * space.basis[k][j];
        return x;
    };
    auto feasible = [&](const Row & x) {
        return std::all_of(bounds.begin(), bounds.end(),
            [&](const Bound & b) { return b.lower ? x[b.var] >= b.value : x[b.var] <= b.value; });
    };

    std::vector<Row> out;
    if (d == 0) {
        if (feasible(space.particular))
            out.push_back(space.particular);
        return out;
    }

    // bounds that actually depend on t
    std::vector<std::size_t> active;
    for (std::size_t i = 0; i < bounds.size(); ++i)
        if (std::any_of(space.basis.begin(), space.basis.end(), [&](const Row & v) { return v[bounds[i].var] != 0; }))
            active.push_back(i);

    std::vector<std::size_t> chosen;
    std::function<bool(std::size_t)> go = [&](std::size_t from) -> bool {
        if (chosen.size() == d) {
            std::vector<Row> rows;
            for (auto i : chosen) {
                const auto & b = bounds[i];
                Row row(d + 1);
                for (std::size_t k = 0; k < d; ++k)
                    row[k] = space.basis[k][b.var];
                row[d] = b.value - space.particular[b.var];
                rows.push_back(std::move(row));
            }
            auto sol = solve_affine(std::move(rows), d);
            if (! sol || ! sol->basis.empty())
                return false;
            auto x = point(sol->particular);
            if (feasible(x)) {
                out.push_back(std::move(x));
                return first_only;
            }
            return false;
        }
        for (std::size_t i = from; i + (d - chosen.size()) <= active.size(); ++i) {
            chosen.push_back(active[i]);
            if (go(i + 1))
                return true;
            chosen.pop_back();
        }
        return false;
    };
    go(0);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace blstate::detail
