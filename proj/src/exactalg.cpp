#include "toricity/exactalg.hpp"

#include <algorithm>
#include <random>
#include <utility>

namespace toricity {

RrefResult rref(const RationalMatrix& m) {
    RationalMatrix a = m;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t p = row;
        while (p < a.rows() && a(p, col) == 0) ++p;
        if (p == a.rows()) continue;
        if (p != row)
            for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(p, c), a(row, c));
        Rational inv = 1 / a(row, col);
        for (std::size_t c = col; c < a.cols(); ++c) a(row, c) *= inv;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == row || a(r, col) == 0) continue;
            Rational f = a(r, col);
            for (std::size_t c = col; c < a.cols(); ++c)
                if (a(row, c) != 0) a(r, c) -= f * a(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(a), std::move(pivots)};
}

std::size_t rank(const RationalMatrix& m) { return rref(m).pivots.size(); }

RationalMatrix row_basis(const RationalMatrix& m) {
    auto r = rref(m);
    RationalMatrix out(r.pivots.size(), m.cols());
    for (std::size_t i = 0; i < r.pivots.size(); ++i)
        for (std::size_t c = 0; c < m.cols(); ++c) out(i, c) = r.matrix(i, c);
    return out;
}

CircuitBasis kernel_circuit_basis(const RationalMatrix& m) {
    auto r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : r.pivots) is_pivot[p] = true;
    CircuitBasis out;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        RationalVector v(m.cols());
        v[f] = 1;
        for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.matrix(i, f);
        std::vector<std::size_t> support;
        for (std::size_t j = 0; j < v.size(); ++j)
            if (v[j] != 0) support.push_back(j);
        out.vectors.push_back(std::move(v));
        out.supports.push_back(std::move(support));
    }
    return out;
}

RationalMatrix kernel_matrix(const RationalMatrix& m) {
    auto basis = kernel_circuit_basis(m);
    RationalMatrix out(m.cols(), basis.vectors.size());
    for (std::size_t k = 0; k < basis.vectors.size(); ++k)
        for (std::size_t i = 0; i < m.cols(); ++i) out(i, k) = basis.vectors[k][i];
    return out;
}

RationalMatrix left_kernel(const RationalMatrix& m) {
    auto basis = kernel_circuit_basis(m.transpose());
    RationalMatrix rows(basis.vectors.size(), m.rows());
    for (std::size_t k = 0; k < basis.vectors.size(); ++k)
        for (std::size_t i = 0; i < m.rows(); ++i) rows(k, i) = basis.vectors[k][i];
    return row_basis(rows);
}

namespace {

void swap_rows(IntegerMatrix& a, std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
}

// a[i] -= q * a[j]
void sub_row(IntegerMatrix& a, std::size_t i, std::size_t j, const Integer& q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < a.cols(); ++c)
        if (a(j, c) != 0) a(i, c) -= q * a(j, c);
}

// Integer row echelon form on the first `ncols` columns using only unimodular
// row operations. Returns the number of pivot rows. Pivots are made positive.
std::size_t integer_echelon(IntegerMatrix& a, std::size_t ncols, std::vector<std::size_t>* pivots) {
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < a.rows(); ++col) {
        while (true) {
            // pick the row with smallest nonzero |entry| in this column
            std::size_t best = a.rows();
            for (std::size_t r = row; r < a.rows(); ++r) {
                if (a(r, col) == 0) continue;
                if (best == a.rows() || abs(a(r, col)) < abs(a(best, col))) best = r;
            }
            if (best == a.rows()) break;
            swap_rows(a, row, best);
            bool done = true;
            for (std::size_t r = row + 1; r < a.rows(); ++r) {
                if (a(r, col) == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), a(r, col).get_mpz_t(), a(row, col).get_mpz_t());
                sub_row(a, r, row, q);
                if (a(r, col) != 0) done = false;
            }
            if (done) break;
        }
        if (a(row, col) == 0) continue;
        if (a(row, col) < 0)
            for (std::size_t c = 0; c < a.cols(); ++c) a(row, c) = -a(row, c);
        if (pivots) pivots->push_back(col);
        ++row;
    }
    return row;
}

}  // namespace

IntegerMatrix hermite_normal_form(const IntegerMatrix& m) {
    IntegerMatrix a = m;
    std::vector<std::size_t> pivots;
    std::size_t r = integer_echelon(a, a.cols(), &pivots);
    for (std::size_t i = 0; i < r; ++i) {
        std::size_t col = pivots[i];
        for (std::size_t k = 0; k < i; ++k) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), a(k, col).get_mpz_t(), a(i, col).get_mpz_t());
            sub_row(a, k, i, q);
        }
    }
    IntegerMatrix out(r, m.cols());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t c = 0; c < m.cols(); ++c) out(i, c) = a(i, c);
    return out;
}

IntegerMatrix left_integer_kernel(const IntegerMatrix& x) {
    const std::size_t n = x.rows();
    IntegerMatrix g(n, x.cols() + n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < x.cols(); ++c) g(r, c) = x(r, c);
        g(r, x.cols() + r) = 1;
    }
    std::size_t rk = integer_echelon(g, x.cols(), nullptr);
    IntegerMatrix kernel(n - rk, n);
    for (std::size_t r = rk; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) kernel(r - rk, c) = g(r, x.cols() + c);
    return hermite_normal_form(kernel);
}

IntegerMatrix integer_kernel_basis(const IntegerMatrix& m, LatticeMode mode) {
    if (mode == LatticeMode::IntegerLattice) {
        IntegerMatrix k = left_integer_kernel(m);
        if (k.rows() == 0) return IntegerMatrix(0, m.rows());
        return k;
    }
    RationalMatrix lk = left_kernel(to_rational(m));
    if (lk.rows() == 0) return IntegerMatrix(0, m.rows());
    IntegerMatrix k(lk.rows(), lk.cols());
    for (std::size_t r = 0; r < lk.rows(); ++r) {
        auto v = primitive_integer_vector(lk.row(r));
        for (std::size_t c = 0; c < v.size(); ++c) k(r, c) = v[c];
    }
    // saturate: (Q-span of k) ∩ Z^N is the left Z-kernel of a Z-basis of the
    // right kernel of k
    IntegerMatrix w = left_integer_kernel(k.transpose());  // rows w with k w^T = 0
    if (w.rows() == 0) {
        return IntegerMatrix::identity(m.rows());
    }
    IntegerMatrix sat = left_integer_kernel(w.transpose());
    return sat;
}

IntegerVector smith_invariants(const IntegerMatrix& m) {
    IntegerMatrix a = m;
    const std::size_t R = a.rows(), C = a.cols();
    IntegerVector diag;
    std::size_t t = 0;
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < R; ++r) std::swap(a(r, i), a(r, j));
    };
    while (t < R && t < C) {
        // find smallest nonzero entry in the trailing block
        std::size_t br = R, bc = C;
        for (std::size_t r = t; r < R; ++r)
            for (std::size_t c = t; c < C; ++c)
                if (a(r, c) != 0 && (br == R || abs(a(r, c)) < abs(a(br, bc)))) {
                    br = r;
                    bc = c;
                }
        if (br == R) break;
        swap_rows(a, t, br);
        swap_cols(t, bc);
        bool clean = true;
        for (std::size_t r = t + 1; r < R; ++r) {
            if (a(r, t) == 0) continue;
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), a(r, t).get_mpz_t(), a(t, t).get_mpz_t());
            sub_row(a, r, t, q);
            if (a(r, t) != 0) clean = false;
        }
        for (std::size_t c = t + 1; c < C; ++c) {
            if (a(t, c) == 0) continue;
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), a(t, c).get_mpz_t(), a(t, t).get_mpz_t());
            for (std::size_t r = 0; r < R; ++r) a(r, c) -= q * a(r, t);
            if (a(t, c) != 0) clean = false;
        }
        if (!clean) continue;
        // divisibility: if pivot does not divide some trailing entry, fold that row in
        bool divides = true;
        for (std::size_t r = t + 1; r < R && divides; ++r)
            for (std::size_t c = t + 1; c < C; ++c)
                if (a(r, c) % a(t, t) != 0) {
                    for (std::size_t k = 0; k < C; ++k) a(t, k) += a(r, k);
                    divides = false;
                    break;
                }
        if (!divides) continue;
        diag.push_back(abs(a(t, t)));
        ++t;
    }
    return diag;
}

bool same_row_lattice(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols() != b.cols()) return false;
    return hermite_normal_form(a) == hermite_normal_form(b);
}

bool row_lattice_contains(const IntegerMatrix& lattice, const IntegerMatrix& sub) {
    if (sub.rows() == 0) return true;
    if (lattice.cols() != sub.cols()) return false;
    return hermite_normal_form(lattice.vstack(sub)) == hermite_normal_form(lattice);
}

RationalVector random_kernel_vector(const RationalMatrix& m, std::uint64_t seed) {
    auto basis = kernel_circuit_basis(m);
    if (basis.vectors.empty()) {
        throw ToricityError(ErrorKind::TrivialKernel, "matrix has trivial kernel");
    }
    std::mt19937_64 gen(seed);
    constexpr long bound = 1L << 16;
    RationalVector out(m.cols());
    while (true) {
        bool any = false;
        std::fill(out.begin(), out.end(), Rational(0));
        for (const auto& v : basis.vectors) {
            // uniform_int_distribution is not portable across standard
            // libraries; a plain modulo keeps seeds reproducible everywhere
            long c = static_cast<long>(gen() % (2 * bound + 1)) - bound;
            if (c == 0) continue;
            any = true;
            for (std::size_t i = 0; i < v.size(); ++i)
                if (v[i] != 0) out[i] += c * v[i];
        }
        if (any) return out;
    }
}

std::optional<RationalVector> solve_linear(const RationalMatrix& m, std::span<const Rational> b) {
    if (b.size() != m.rows()) {
        throw ToricityError(ErrorKind::DimensionMismatch, "solve_linear: right-hand side length mismatch");
    }
    RationalMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
        aug(r, m.cols()) = b[r];
    }
    auto red = rref(aug);
    RationalVector x(m.cols());
    for (std::size_t i = 0; i < red.pivots.size(); ++i) {
        if (red.pivots[i] == m.cols()) return std::nullopt;
        x[red.pivots[i]] = red.matrix(i, m.cols());
    }
    return x;
}

Rational determinant(const RationalMatrix& m) {
    if (m.rows() != m.cols()) {
        throw ToricityError(ErrorKind::DimensionMismatch, "determinant of non-square matrix");
    }
    RationalMatrix a = m;
    const std::size_t n = a.rows();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && a(p, col) == 0) ++p;
        if (p == n) return 0;
        if (p != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a(p, c), a(col, c));
            det = -det;
        }
        det *= a(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a(r, col) == 0) continue;
            Rational f = a(r, col) / a(col, col);
            for (std::size_t c = col; c < n; ++c) a(r, c) -= f * a(col, c);
        }
    }
    return det;
}

}  // namespace toricity
