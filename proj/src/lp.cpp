#include "coqkit/lp.hpp"

#include <stdexcept>

namespace coqkit {

namespace {

// Gauss-Jordan on [A | b]; drops dependent rows, returns nothing when inconsistent.
std::optional<std::vector<LinearSystem::Row>> reduce_equalities(std::vector<LinearSystem::Row> rows,
                                                                std::size_t vars) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < vars && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p].coef[c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[r], rows[p]);
        Rat piv = rows[r].coef[c];
        for (auto& v : rows[r].coef) v /= piv;
        rows[r].rhs /= piv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i].coef[c] == 0) continue;
            Rat f = rows[i].coef[c];
            for (std::size_t j = 0; j < vars; ++j) rows[i].coef[j] -= f * rows[r].coef[j];
            rows[i].rhs -= f * rows[r].rhs;
        }
        ++r;
    }
    for (std::size_t i = r; i < rows.size(); ++i)
        if (rows[i].rhs != 0) return std::nullopt;
    rows.resize(r);
    return rows;
}

}  // namespace

std::optional<std::vector<Rat>> feasible_point(const LinearSystem& sys) {
    const std::size_t m = sys.vars;
    if (sys.lower.size() != m || sys.upper.size() != m) throw std::invalid_argument("bounds size mismatch");
    for (std::size_t i = 0; i < m; ++i)
        if (sys.lower[i] > sys.upper[i]) return std::nullopt;

    // shift x = lower + y so that y >= 0
    auto shifted = [&](const LinearSystem::Row& row) {
        LinearSystem::Row out = row;
        for (std::size_t i = 0; i < m; ++i) out.rhs -= row.coef[i] * sys.lower[i];
        return out;
    };
    std::vector<LinearSystem::Row> eqs;
    for (const auto& row : sys.eq) eqs.push_back(shifted(row));
    auto reduced = reduce_equalities(std::move(eqs), m);
    if (!reduced) return std::nullopt;

    std::vector<LinearSystem::Row> les;
    for (const auto& row : sys.le) les.push_back(shifted(row));
    for (std::size_t i = 0; i < m; ++i) {
        LinearSystem::Row ub{std::vector<Rat>(m), sys.upper[i] - sys.lower[i]};
        ub.coef[i] = 1;
        les.push_back(std::move(ub));
    }

    const std::size_t ne = reduced->size(), nl = les.size(), rows = ne + nl;
    // columns: y (m), slacks (nl), artificials (allocated on demand)
    std::vector<std::vector<Rat>> t(rows);
    std::vector<Rat> rhs(rows);
    std::vector<std::size_t> basis(rows);
    std::vector<std::size_t> art_rows;
    for (std::size_t r = 0; r < rows; ++r) {
        t[r].assign(m + nl, Rat(0));
        const auto& src = r < ne ? (*reduced)[r] : les[r - ne];
        for (std::size_t j = 0; j < m; ++j) t[r][j] = src.coef[j];
        rhs[r] = src.rhs;
        if (r >= ne) t[r][m + (r - ne)] = 1;
        if (rhs[r] < 0) {
            for (auto& v : t[r]) v = -v;
            rhs[r] = -rhs[r];
        }
        if (r >= ne && t[r][m + (r - ne)] == 1)
            basis[r] = m + (r - ne);
        else
            art_rows.push_back(r);
    }
    const std::size_t first_art = m + nl, cols = first_art + art_rows.size();
    for (auto& row : t) row.resize(cols, Rat(0));
    for (std::size_t k = 0; k < art_rows.size(); ++k) {
        t[art_rows[k]][first_art + k] = 1;
        basis[art_rows[k]] = first_art + k;
    }
    auto cost = [&](std::size_t j) { return j >= first_art ? 1 : 0; };

    for (;;) {
        std::size_t enter = cols;
        for (std::size_t j = 0; j < cols && enter == cols; ++j) {
            Rat d = cost(j);
            for (std::size_t r = 0; r < rows; ++r)
                if (cost(basis[r]) && t[r][j] != 0) d -= t[r][j];
            if (d < 0) enter = j;
        }
        if (enter == cols) break;
        std::size_t leave = rows;
        Rat best;
        for (std::size_t r = 0; r < rows; ++r) {
            if (t[r][enter] <= 0) continue;
            Rat ratio = rhs[r] / t[r][enter];
            if (leave == rows || ratio < best || (ratio == best && basis[r] < basis[leave])) {
                leave = r;
                best = ratio;
            }
        }
        if (leave == rows) throw std::logic_error("phase-1 simplex unbounded");
        Rat piv = t[leave][enter];
        for (auto& v : t[leave]) v /= piv;
        rhs[leave] /= piv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == leave || t[r][enter] == 0) continue;
            Rat f = t[r][enter];
            for (std::size_t j = 0; j < cols; ++j)
                if (t[leave][j] != 0) t[r][j] -= f * t[leave][j];
            rhs[r] -= f * rhs[leave];
        }
        basis[leave] = enter;
    }
    for (std::size_t r = 0; r < rows; ++r)
        if (basis[r] >= first_art && rhs[r] != 0) return std::nullopt;

    std::vector<Rat> x = sys.lower;
    for (std::size_t r = 0; r < rows; ++r)
        if (basis[r] < m) x[basis[r]] += rhs[r];
    return x;
}

}  // namespace coqkit
