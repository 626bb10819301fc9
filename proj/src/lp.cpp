#include "toricity/lp.hpp"

#include <vector>

namespace toricity {

namespace {

// Dense tableau: rows 0..m-1 are constraints, last column is the rhs.
// `obj` holds reduced costs for maximization (entering column has obj > 0)
// and obj[ncols] the negated objective value.
struct Tableau {
    std::size_t m = 0, ncols = 0;
    std::vector<RationalVector> t;
    RationalVector obj;
    std::vector<std::size_t> basis;

    void pivot(std::size_t r, std::size_t c) {
        Rational inv = 1 / t[r][c];
        for (auto& e : t[r])
            if (e != 0) e *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || t[i][c] == 0) continue;
            Rational f = t[i][c];
            for (std::size_t j = 0; j <= ncols; ++j)
                if (t[r][j] != 0) t[i][j] -= f * t[r][j];
        }
        if (obj[c] != 0) {
            Rational f = obj[c];
            for (std::size_t j = 0; j <= ncols; ++j)
                if (t[r][j] != 0) obj[j] -= f * t[r][j];
        }
        basis[r] = c;
    }

    // Returns false when unbounded.
    bool run(const std::vector<bool>& allowed) {
        while (true) {
            std::size_t enter = ncols;
            for (std::size_t j = 0; j < ncols; ++j)
                if (allowed[j] && obj[j] > 0) {
                    enter = j;
                    break;
                }
            if (enter == ncols) return true;
            std::size_t leave = m;
            Rational best;
            for (std::size_t i = 0; i < m; ++i) {
                if (t[i][enter] <= 0) continue;
                Rational ratio = t[i][ncols] / t[i][enter];
                if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == m) return false;
            pivot(leave, enter);
        }
    }

    void set_objective(std::span<const Rational> c) {
        obj.assign(ncols + 1, Rational(0));
        for (std::size_t j = 0; j < c.size(); ++j) obj[j] = c[j];
        for (std::size_t i = 0; i < m; ++i) {
            const Rational& cb = obj[basis[i]];
            if (cb == 0) continue;
            Rational f = cb;
            for (std::size_t j = 0; j <= ncols; ++j)
                if (t[i][j] != 0) obj[j] -= f * t[i][j];
        }
    }
};

}  // namespace

LpResult solve_lp(const RationalMatrix& a, std::span<const Rational> b, std::span<const Rational> c) {
    const std::size_t m = a.rows(), n = a.cols();
    if (b.size() != m || c.size() != n) {
        throw ToricityError(ErrorKind::DimensionMismatch, "solve_lp: shape mismatch");
    }
    Tableau tab;
    tab.m = m;
    tab.ncols = n + m;
    tab.t.assign(m, RationalVector(n + m + 1));
    tab.basis.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        bool flip = b[i] < 0;
        for (std::size_t j = 0; j < n; ++j) tab.t[i][j] = flip ? -a(i, j) : a(i, j);
        tab.t[i][n + i] = 1;
        tab.t[i][n + m] = flip ? -b[i] : b[i];
        tab.basis[i] = n + i;
    }

    // phase 1: maximize -sum(artificials)
    RationalVector c1(n + m);
    for (std::size_t i = 0; i < m; ++i) c1[n + i] = -1;
    tab.set_objective(c1);
    std::vector<bool> allowed(n + m, true);
    tab.run(allowed);
    if (tab.obj[n + m] != 0) return {LpStatus::Infeasible, 0, {}};

    // drive artificials out of the basis; drop redundant rows
    for (std::size_t i = 0; i < tab.m;) {
        if (tab.basis[i] < n) {
            ++i;
            continue;
        }
        std::size_t col = n;
        for (std::size_t j = 0; j < n; ++j)
            if (tab.t[i][j] != 0) {
                col = j;
                break;
            }
        if (col < n) {
            tab.pivot(i, col);
            ++i;
        } else {
            tab.t.erase(tab.t.begin() + static_cast<std::ptrdiff_t>(i));
            tab.basis.erase(tab.basis.begin() + static_cast<std::ptrdiff_t>(i));
            --tab.m;
        }
    }

    for (std::size_t j = n; j < n + m; ++j) allowed[j] = false;
    RationalVector c2(n + m);
    for (std::size_t j = 0; j < n; ++j) c2[j] = c[j];
    tab.set_objective(c2);
    if (!tab.run(allowed)) return {LpStatus::Unbounded, 0, {}};

    LpResult out;
    out.status = LpStatus::Optimal;
    out.x.assign(n, Rational(0));
    for (std::size_t i = 0; i < tab.m; ++i)
        if (tab.basis[i] < n) out.x[tab.basis[i]] = tab.t[i][n + m];
    for (std::size_t j = 0; j < n; ++j) out.value += c[j] * out.x[j];
    return out;
}

}  // namespace toricity
