#include "toricity/polyhedra.hpp"

#include "toricity/exactalg.hpp"
#include "toricity/lp.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace toricity {

std::optional<IntegerVector> strictly_positive_kernel(const RationalMatrix& m) {
    const std::size_t k = m.rows(), n = m.cols();
    if (n == 0) return std::nullopt;
    // variables: w (n), t, s (n), r
    const std::size_t nv = 2 * n + 2;
    const std::size_t t = n, s0 = n + 1, r = 2 * n + 1;
    RationalMatrix a(k + n + 1, nv);
    RationalVector b(k + n + 1);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = m(i, j);
    for (std::size_t j = 0; j < n; ++j) {
        a(k + j, j) = 1;
        a(k + j, t) = -1;
        a(k + j, s0 + j) = -1;
    }
    a(k + n, t) = 1;
    a(k + n, r) = 1;
    b[k + n] = 1;
    RationalVector c(nv);
    c[t] = 1;
    auto res = solve_lp(a, b, c);
    if (res.status != LpStatus::Optimal || res.value <= 0) return std::nullopt;
    return primitive_integer_vector(std::span<const Rational>(res.x.data(), n));
}

ConeRays extreme_rays(const RationalMatrix& m) {
    const std::size_t n = m.cols();
    ConeRays out;
    out.ambient_dim = n;
    auto red = rref(m);
    std::vector<bool> is_pivot(n, false);
    for (auto p : red.pivots) is_pivot[p] = true;
    auto basis = kernel_circuit_basis(m);
    if (basis.vectors.empty()) return out;

    std::vector<IntegerVector> rays;
    for (const auto& v : basis.vectors) rays.push_back(primitive_integer_vector(v));
    std::vector<std::size_t> processed;
    for (std::size_t j = 0; j < n; ++j)
        if (!is_pivot[j]) processed.push_back(j);

    auto zero_set = [&](const IntegerVector& v) {
        std::vector<std::size_t> z;
        for (auto j : processed)
            if (v[j] == 0) z.push_back(j);
        return z;
    };

    for (auto p : red.pivots) {
        std::vector<IntegerVector> pos, neg, next;
        for (auto& r : rays) {
            int sg = sgn(r[p]);
            if (sg > 0) pos.push_back(r);
            else if (sg < 0) neg.push_back(r);
            else next.push_back(r);
        }
        std::vector<std::vector<std::size_t>> zs;
        for (auto& r : rays) zs.push_back(zero_set(r));
        std::vector<std::vector<std::size_t>> zpos, zneg;
        for (auto& r : pos) zpos.push_back(zero_set(r));
        for (auto& r : neg) zneg.push_back(zero_set(r));
        for (std::size_t i = 0; i < pos.size(); ++i) {
            for (std::size_t j = 0; j < neg.size(); ++j) {
                std::vector<std::size_t> common;
                std::set_intersection(zpos[i].begin(), zpos[i].end(), zneg[j].begin(), zneg[j].end(),
                                      std::back_inserter(common));
                bool adjacent = true;
                for (std::size_t q = 0; q < rays.size() && adjacent; ++q) {
                    if (rays[q] == pos[i] || rays[q] == neg[j]) continue;
                    if (std::includes(zs[q].begin(), zs[q].end(), common.begin(), common.end()))
                        adjacent = false;
                }
                if (!adjacent) continue;
                Integer a = abs(neg[j][p]), bcoef = pos[i][p];
                IntegerVector comb(n);
                for (std::size_t k = 0; k < n; ++k) comb[k] = a * pos[i][k] + bcoef * neg[j][k];
                next.push_back(make_primitive(std::move(comb)));
            }
        }
        next.insert(next.end(), pos.begin(), pos.end());
        processed.push_back(p);
        std::sort(processed.begin(), processed.end());
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        rays = std::move(next);
    }
    std::sort(rays.begin(), rays.end());
    out.rays = std::move(rays);
    return out;
}

bool positive_row_space(const IntegerMatrix& a) {
    if (a.rows() == 0) return false;
    // row(a) = ker(K^T) for a kernel basis K of a
    RationalMatrix k = kernel_matrix(to_rational(a));
    if (k.cols() == 0) return a.cols() > 0;
    return strictly_positive_kernel(k.transpose()).has_value();
}

SupportSet::SupportSet(std::vector<LatticePoint> pts) : points(std::move(pts)) {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    for (const auto& p : points)
        if (p.size() != points.front().size())
            throw ToricityError(ErrorKind::DimensionMismatch, "support points of mixed dimension");
}

namespace {

Integer integer_det(std::vector<std::vector<Integer>> a) {
    // Bareiss fraction-free elimination
    const std::size_t n = a.size();
    if (n == 0) return 1;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[p], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

// det of (pts[idx[1]]-pts[idx[0]], ..., pts[idx[n]]-pts[idx[0]])
Integer simplex_det(const std::vector<LatticePoint>& pts, const std::vector<std::size_t>& idx) {
    const std::size_t n = idx.size() - 1;
    std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
    const auto& o = pts[idx[0]];
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = Integer(static_cast<long>(pts[idx[i + 1]][j] - o[j]));
    return integer_det(std::move(a));
}

int orientation(const std::vector<LatticePoint>& pts, const std::vector<std::size_t>& face, std::size_t x) {
    std::vector<std::size_t> idx = face;
    idx.push_back(x);
    return sgn(simplex_det(pts, idx));
}

Integer factorial(std::size_t n) {
    Integer f = 1;
    for (std::size_t i = 2; i <= n; ++i) f *= static_cast<unsigned long>(i);
    return f;
}

struct PlacedHull {
    Rational volume;
    std::vector<std::size_t> used;  // indices of points that became simplex vertices
    bool full_dim = false;
};

PlacedHull placing_triangulation(const std::vector<LatticePoint>& pts, std::size_t n) {
    PlacedHull out;
    if (pts.empty()) return out;
    if (n == 0) {
        out.volume = 1;
        out.full_dim = true;
        out.used = {0};
        return out;
    }
    // greedy affinely independent start
    std::vector<std::size_t> simplex = {0};
    {
        RationalMatrix dirs(0, n);
        for (std::size_t i = 1; i < pts.size() && simplex.size() < n + 1; ++i) {
            RationalMatrix row(1, n);
            for (std::size_t j = 0; j < n; ++j) row(0, j) = Rational(static_cast<long>(pts[i][j] - pts[0][j]));
            RationalMatrix cand = dirs.vstack(row);
            if (rank(cand) == cand.rows()) {
                dirs = cand;
                simplex.push_back(i);
            }
        }
    }
    if (simplex.size() < n + 1) return out;
    out.full_dim = true;

    Integer total = 0;
    // boundary faces (sorted index lists) -> opposite vertex
    std::map<std::vector<std::size_t>, std::size_t> boundary;
    auto add_simplex = [&](const std::vector<std::size_t>& s) {
        total += abs(simplex_det(pts, s));
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
            std::vector<std::size_t> face;
            for (std::size_t k = 0; k < s.size(); ++k)
                if (k != drop) face.push_back(s[k]);
            std::sort(face.begin(), face.end());
            auto it = boundary.find(face);
            if (it != boundary.end()) boundary.erase(it);
            else boundary.emplace(std::move(face), s[drop]);
        }
    };
    add_simplex(simplex);
    std::set<std::size_t> used(simplex.begin(), simplex.end());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (used.count(i)) continue;
        std::vector<std::vector<std::size_t>> visible;
        for (const auto& [face, opp] : boundary) {
            int so = orientation(pts, face, opp);
            int sp = orientation(pts, face, i);
            if (sp != 0 && sp != so) visible.push_back(face);
        }
        if (visible.empty()) continue;
        used.insert(i);
        for (auto& f : visible) {
            f.push_back(i);
            add_simplex(f);
        }
    }
    out.volume = Rational(total, factorial(n));
    out.volume.canonicalize();
    out.used.assign(used.begin(), used.end());
    return out;
}

std::vector<LatticePoint> prune(const std::vector<LatticePoint>& pts, std::size_t n) {
    auto hull = placing_triangulation(pts, n);
    if (!hull.full_dim) return pts;
    std::vector<LatticePoint> out;
    for (auto i : hull.used) out.push_back(pts[i]);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

Rational polytope_volume(const SupportSet& s) {
    return placing_triangulation(s.points, s.dim()).volume;
}

SupportSet convex_hull_vertices(const SupportSet& s) {
    std::vector<LatticePoint> verts;
    const std::size_t n = s.dim();
    for (std::size_t i = 0; i < s.points.size(); ++i) {
        std::vector<std::size_t> others;
        for (std::size_t j = 0; j < s.points.size(); ++j)
            if (j != i) others.push_back(j);
        if (others.empty()) {
            verts.push_back(s.points[i]);
            continue;
        }
        // feasibility of sum_j mu_j p_j = p_i, sum mu_j = 1, mu >= 0
        RationalMatrix a(n + 1, others.size());
        RationalVector b(n + 1);
        for (std::size_t k = 0; k < others.size(); ++k) {
            for (std::size_t d = 0; d < n; ++d) a(d, k) = Rational(static_cast<long>(s.points[others[k]][d]));
            a(n, k) = 1;
        }
        for (std::size_t d = 0; d < n; ++d) b[d] = Rational(static_cast<long>(s.points[i][d]));
        b[n] = 1;
        RationalVector c(others.size());
        if (solve_lp(a, b, c).status == LpStatus::Infeasible) verts.push_back(s.points[i]);
    }
    return SupportSet(std::move(verts));
}

SupportSet minkowski_sum(const SupportSet& a, const SupportSet& b) {
    if (a.points.empty()) return b;
    if (b.points.empty()) return a;
    if (a.dim() != b.dim()) throw ToricityError(ErrorKind::DimensionMismatch, "minkowski_sum: dimension mismatch");
    std::vector<LatticePoint> pts;
    pts.reserve(a.points.size() * b.points.size());
    for (const auto& p : a.points)
        for (const auto& q : b.points) {
            LatticePoint r(p.size());
            for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[i] + q[i];
            pts.push_back(std::move(r));
        }
    return SupportSet(std::move(pts));
}

Integer mixed_volume(std::span<const SupportSet> supports) {
    const std::size_t n = supports.size();
    if (n == 0) return 1;
    for (const auto& s : supports) {
        if (s.points.empty() || s.dim() != n) {
            throw ToricityError(ErrorKind::DimensionMismatch,
                                "mixed volume needs " + std::to_string(n) + " nonempty supports in Z^" +
                                    std::to_string(n));
        }
    }
    if (n > 20) throw ToricityError(ErrorKind::SizeGuard, "mixed volume: too many supports");
    std::vector<std::vector<LatticePoint>> pruned;
    for (const auto& s : supports) pruned.push_back(prune(s.points, n));

    // sums[S] built from sums[S without its top bit]
    const std::size_t total = std::size_t{1} << n;
    std::vector<std::vector<LatticePoint>> sums(total);
    Rational acc = 0;
    for (std::size_t mask = 1; mask < total; ++mask) {
        std::size_t top = 0;
        while ((mask >> (top + 1)) != 0) ++top;
        std::size_t rest = mask & ~(std::size_t{1} << top);
        if (rest == 0) {
            sums[mask] = pruned[top];
        } else {
            SupportSet s = minkowski_sum(SupportSet(sums[rest]), SupportSet(pruned[top]));
            sums[mask] = prune(s.points, n);
        }
        Rational vol = placing_triangulation(sums[mask], n).volume;
        int k = __builtin_popcountll(mask);
        if ((n - static_cast<std::size_t>(k)) % 2 == 0) acc += vol;
        else acc -= vol;
    }
    if (acc.get_den() != 1) {
        throw ToricityError(ErrorKind::InternalInconsistency, "mixed volume is not an integer: " + acc.get_str());
    }
    return acc.get_num();
}

}  // namespace toricity
