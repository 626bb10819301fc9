#include "toricity/toricity.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <random>

namespace toricity {

const char* to_string(GroupMode mode) {
    switch (mode) {
        case GroupMode::Positive: return "positive";
        case GroupMode::RealStar: return "real-star";
        case GroupMode::ComplexStar: return "complex-star";
    }
    return "?";
}

GroupMode parse_group_mode(const std::string& text) {
    if (text == "positive") return GroupMode::Positive;
    if (text == "real-star") return GroupMode::RealStar;
    if (text == "complex-star") return GroupMode::ComplexStar;
    throw ToricityError(ErrorKind::Parse, "unknown group mode '" + text + "'");
}

const char* to_string(Nondegeneracy v) {
    switch (v) {
        case Nondegeneracy::Yes: return "Yes";
        case Nondegeneracy::No: return "No";
        case Nondegeneracy::Undetermined: return "Undetermined";
    }
    return "?";
}

const char* to_string(AllPositive v) { return v == AllPositive::Yes ? "Yes" : "Unknown"; }

const char* to_string(LocalToricity v) {
    switch (v) {
        case LocalToricity::NotLocallyToric: return "NotLocallyToric";
        case LocalToricity::GenericallyLocallyToric: return "GenericallyLocallyToric";
        case LocalToricity::LocallyToric: return "LocallyToric";
        case LocalToricity::Undetermined: return "Undetermined";
    }
    return "?";
}

const char* to_string(InjectivityOutcome v) { return v == InjectivityOutcome::Toric ? "Toric" : "Inconclusive"; }

const char* to_string(Tri v) {
    switch (v) {
        case Tri::Yes: return "Yes";
        case Tri::No: return "No";
        case Tri::Unknown: return "Unknown";
    }
    return "?";
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("TORICITY_SEED")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && end != env) return v;
    }
    return 1;
}

// ---------------------------------------------------------------------------

VerticalSystem::VerticalSystem(RationalMatrix c, IntegerMatrix m, std::vector<std::string> variables,
                               std::vector<std::string> parameters)
    : c_(std::move(c)), m_(std::move(m)), vars_(std::move(variables)), params_(std::move(parameters)) {
    if (c_.cols() != m_.cols()) {
        throw ToricityError(ErrorKind::DimensionMismatch,
                            "C has " + std::to_string(c_.cols()) + " columns but M has " +
                                std::to_string(m_.cols()));
    }
    if (vars_.empty()) vars_ = numbered_names("x", m_.rows());
    if (params_.empty()) params_ = numbered_names("k", m_.cols());
    if (vars_.size() != m_.rows() || params_.size() != m_.cols()) {
        throw ToricityError(ErrorKind::DimensionMismatch, "variable or parameter name count mismatch");
    }
    input_c_ = c_;
    std::size_t r = rank(c_);
    if (r == 0) throw ToricityError(ErrorKind::Precondition, "C has rank 0");
    if (r < c_.rows()) {
        c_ = row_basis(c_);
        row_reduced_ = true;
    }
}

namespace {

SparsePolynomial row_polynomial(const RationalMatrix& c, const IntegerMatrix& m, std::size_t row,
                                const std::vector<std::string>& vars, std::size_t offset,
                                const std::function<SparsePolynomial(std::size_t)>& coefficient) {
    const std::size_t n = m.rows();
    std::vector<Integer> low(n);
    bool first = true;
    for (std::size_t j = 0; j < c.cols(); ++j) {
        if (c(row, j) == 0) continue;
        for (std::size_t i = 0; i < n; ++i)
            if (first || m(i, j) < low[i]) low[i] = m(i, j);
        first = false;
    }
    SparsePolynomial out(vars);
    for (std::size_t j = 0; j < c.cols(); ++j) {
        if (c(row, j) == 0) continue;
        Exponent e(vars.size(), 0);
        for (std::size_t i = 0; i < n; ++i) e[offset + i] = static_cast<std::uint32_t>(Integer(m(i, j) - low[i]).get_ui());
        out += coefficient(j) * SparsePolynomial::monomial(vars, e, c(row, j));
    }
    return out;
}

}  // namespace

std::vector<SparsePolynomial> VerticalSystem::polynomials(std::span<const Rational> kappa) const {
    if (kappa.size() != m()) {
        throw ToricityError(ErrorKind::DimensionMismatch,
                            "kappa has " + std::to_string(kappa.size()) + " entries, expected " + std::to_string(m()));
    }
    std::vector<SparsePolynomial> out;
    for (std::size_t i = 0; i < s(); ++i)
        out.push_back(row_polynomial(c_, m_, i, vars_, 0,
                                     [&](std::size_t j) { return SparsePolynomial::constant(vars_, kappa[j]); }));
    return out;
}

std::vector<SparsePolynomial> VerticalSystem::symbolic_polynomials() const {
    std::vector<std::string> all = params_;
    all.insert(all.end(), vars_.begin(), vars_.end());
    std::vector<SparsePolynomial> out;
    for (std::size_t i = 0; i < s(); ++i)
        out.push_back(row_polynomial(c_, m_, i, all, params_.size(),
                                     [&](std::size_t j) { return SparsePolynomial::variable(all, j); }));
    return out;
}

// ---------------------------------------------------------------------------

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

MatroidPartition blocks_from_supports(std::size_t m, const std::vector<std::vector<std::size_t>>& supports) {
    UnionFind uf(m);
    for (const auto& s : supports)
        for (std::size_t k = 1; k < s.size(); ++k) uf.unite(s[0], s[k]);
    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t j = 0; j < m; ++j) groups[uf.find(j)].push_back(j);
    MatroidPartition out;
    for (auto& [root, block] : groups) out.blocks.push_back(std::move(block));
    return out;
}

IntegerMatrix cayley_kernel(const IntegerMatrix& M, const MatroidPartition& partition, LatticeMode mode) {
    const std::size_t n = M.rows(), m = M.cols(), theta = partition.blocks.size();
    IntegerMatrix hat(n + theta, m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) hat(i, j) = M(i, j);
    for (std::size_t b = 0; b < theta; ++b)
        for (auto j : partition.blocks[b]) hat(n + b, j) = 1;
    IntegerMatrix k = integer_kernel_basis(hat, mode);
    IntegerMatrix a(k.rows(), n);
    for (std::size_t r = 0; r < k.rows(); ++r)
        for (std::size_t i = 0; i < n; ++i) a(r, i) = k(r, i);
    IntegerMatrix h = hermite_normal_form(a);
    if (h.rows() == 0) return IntegerMatrix(0, n);
    return h;
}

}  // namespace

MatroidPartition matroid_partition(const VerticalSystem& sys) {
    return blocks_from_supports(sys.m(), kernel_circuit_basis(sys.C()).supports);
}

bool positive_locus_nonempty(const VerticalSystem& sys, GroupMode mode) {
    if (mode == GroupMode::Positive) return strictly_positive_kernel(sys.C()).has_value();
    auto basis = kernel_circuit_basis(sys.C());
    std::vector<bool> covered(sys.m(), false);
    for (const auto& s : basis.supports)
        for (auto j : s) covered[j] = true;
    return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

InvarianceResult invariance_group(const VerticalSystem& sys, GroupMode mode) {
    if (!positive_locus_nonempty(sys, mode)) {
        throw ToricityError(ErrorKind::EmptyLocus,
                            std::string("the zero set over ") + to_string(mode) + " is empty for every kappa");
    }
    InvarianceResult out;
    out.mode = mode;
    out.partition = matroid_partition(sys);
    LatticeMode lm = mode == GroupMode::RealStar ? LatticeMode::IntegerLattice : LatticeMode::RationalSaturated;
    out.A = cayley_kernel(sys.M(), out.partition, lm);
    out.d = out.A.rows();
    return out;
}

IntegerMatrix quasihomogeneity_weights(const VerticalSystem& sys) {
    const auto& c = sys.input_C();
    std::vector<std::vector<std::size_t>> supports;
    for (std::size_t i = 0; i < c.rows(); ++i) {
        std::vector<std::size_t> s;
        for (std::size_t j = 0; j < c.cols(); ++j)
            if (c(i, j) != 0) s.push_back(j);
        supports.push_back(std::move(s));
    }
    return cayley_kernel(sys.M(), blocks_from_supports(sys.m(), supports), LatticeMode::RationalSaturated);
}

// ---------------------------------------------------------------------------

PolynomialMatrix jacobian_pattern(const VerticalSystem& sys, const std::vector<RationalVector>& generators,
                                  const std::vector<std::string>& lambda_names) {
    const auto& C = sys.C();
    const auto& M = sys.M();
    PolynomialMatrix out(sys.s(), sys.n(), SparsePolynomial(lambda_names));
    for (std::size_t i = 0; i < sys.s(); ++i)
        for (std::size_t j = 0; j < sys.n(); ++j) {
            SparsePolynomial e(lambda_names);
            for (std::size_t k = 0; k < generators.size(); ++k) {
                Rational coeff = 0;
                for (std::size_t l = 0; l < sys.m(); ++l)
                    if (C(i, l) != 0 && M(j, l) != 0 && generators[k][l] != 0)
                        coeff += C(i, l) * Rational(M(j, l)) * generators[k][l];
                if (coeff != 0) e += SparsePolynomial::variable(lambda_names, k).scale(coeff);
            }
            out(i, j) = std::move(e);
        }
    return out;
}

namespace {

RationalMatrix weighted_jacobian(const VerticalSystem& sys, std::span<const Rational> w) {
    RationalMatrix cw = sys.C();
    for (std::size_t i = 0; i < cw.rows(); ++i)
        for (std::size_t l = 0; l < cw.cols(); ++l) cw(i, l) *= w[l];
    return cw * to_rational(sys.M()).transpose();
}

// Visits s-subsets of [n] in lexicographic order until `visit` returns true
// or `budget` subsets were seen. Returns whether the visitor stopped early.
template <typename F>
bool for_each_subset(std::size_t n, std::size_t s, std::size_t budget, F&& visit) {
    if (s > n) return false;
    std::vector<std::size_t> idx(s);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::size_t seen = 0;
    while (true) {
        if (seen++ >= budget) return false;
        if (visit(idx)) return true;
        std::size_t i = s;
        while (i > 0 && idx[i - 1] == n - s + i - 1) --i;
        if (i == 0) return false;
        ++idx[i - 1];
        for (std::size_t k = i; k < s; ++k) idx[k] = idx[k - 1] + 1;
    }
}

constexpr std::size_t kMinorBudget = 5000;

}  // namespace

NondegeneracyResult nondegeneracy(const VerticalSystem& sys, std::uint64_t seed) {
    NondegeneracyResult out;
    auto basis = kernel_circuit_basis(sys.C());
    if (basis.vectors.empty()) {
        out.status = Nondegeneracy::No;
        out.method = "trivial kernel";
        return out;
    }
    std::mt19937_64 seeds(seed ^ 0x6e6f6e6465676e31ULL);
    for (int attempt = 0; attempt < 6; ++attempt) {
        auto w = random_kernel_vector(sys.C(), seeds());
        if (rank(weighted_jacobian(sys, w)) == sys.s()) {
            out.status = Nondegeneracy::Yes;
            out.witness = std::move(w);
            out.method = attempt == 0 ? "random kernel vector" : "random kernel vector (retry " + std::to_string(attempt) + ")";
            return out;
        }
    }
    if (sys.s() > 6) {
        out.status = Nondegeneracy::Undetermined;
        out.method = "random evaluation failed; exact minor sweep skipped for s > 6";
        return out;
    }
    auto lambda = numbered_names("lambda", basis.vectors.size());
    auto pattern = jacobian_pattern(sys, basis.vectors, lambda);
    std::optional<SparsePolynomial> nonzero;
    bool exhausted = !for_each_subset(sys.n(), sys.s(), kMinorBudget, [&](const std::vector<std::size_t>& cols) {
        auto det = det_symbolic(pattern.select_columns(cols), lambda);
        if (!det.is_zero()) {
            nonzero = det;
            return true;
        }
        return false;
    });
    if (!nonzero) {
        std::size_t total = 1;
        // C(n, s) within the budget means every minor was checked
        for (std::size_t i = 0; i < sys.s(); ++i) total = total * (sys.n() - i) / (i + 1);
        if (sys.s() <= sys.n() && total > kMinorBudget) {
            out.status = Nondegeneracy::Undetermined;
            out.method = "minor sweep exceeded budget";
            return out;
        }
        (void)exhausted;
        out.status = Nondegeneracy::No;
        out.method = "all maximal minors vanish identically";
        return out;
    }
    // a nonzero minor exists: search a point where it does not vanish
    std::mt19937_64 gen(seed ^ 0x7769746e65737321ULL);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        RationalVector lam(lambda.size());
        for (auto& q : lam) q = Rational(static_cast<long>(gen() % 2000001) - 1000000);
        if (nonzero->evaluate(lam) == 0) continue;
        RationalVector w(sys.m());
        for (std::size_t k = 0; k < basis.vectors.size(); ++k)
            for (std::size_t l = 0; l < sys.m(); ++l) w[l] += lam[k] * basis.vectors[k][l];
        out.status = Nondegeneracy::Yes;
        out.witness = std::move(w);
        out.method = "nonzero symbolic minor";
        return out;
    }
    out.status = Nondegeneracy::Undetermined;
    out.method = "nonzero minor found but no witness point";
    return out;
}

AllPositiveResult nondegeneracy_all_positive(const VerticalSystem& sys) {
    AllPositiveResult out;
    out.rays = extreme_rays(sys.C());
    if (out.rays.rays.empty() || sys.s() > 12) return out;
    std::vector<RationalVector> gens;
    for (const auto& r : out.rays.rays) {
        RationalVector v;
        for (const auto& z : r) v.emplace_back(z);
        gens.push_back(std::move(v));
    }
    auto lambda = numbered_names("lambda", gens.size());
    auto pattern = jacobian_pattern(sys, gens, lambda);
    for_each_subset(sys.n(), sys.s(), kMinorBudget, [&](const std::vector<std::size_t>& cols) {
        auto det = det_symbolic(pattern.select_columns(cols), lambda);
        auto sv = sign_classify(det);
        if (sv == SignVerdict::AllPositive || sv == SignVerdict::AllNegative) {
            out.status = AllPositive::Yes;
            out.columns = cols;
            out.minor = std::move(det);
            return true;
        }
        return false;
    });
    return out;
}

LocalToricity local_toricity(const VerticalSystem& sys, const InvarianceResult& inv, Nondegeneracy nd,
                             std::optional<AllPositive> all_positive) {
    const std::size_t sd = sys.s() + inv.d;
    if (nd != Nondegeneracy::Yes) return LocalToricity::Undetermined;
    if (sd < sys.n()) return LocalToricity::NotLocallyToric;
    if (sd > sys.n()) {
        throw ToricityError(ErrorKind::InternalInconsistency,
                            "s + d = " + std::to_string(sd) + " exceeds n = " + std::to_string(sys.n()) +
                                " for a nondegenerate system");
    }
    if (all_positive && *all_positive == AllPositive::Yes) return LocalToricity::LocallyToric;
    return LocalToricity::GenericallyLocallyToric;
}

InjectivityResult injectivity_test(const VerticalSystem& sys, const InvarianceResult& inv) {
    InjectivityResult out;
    const std::size_t n = sys.n(), m = sys.m(), s = sys.s();
    if (inv.d + s != n) {
        out.reason = "requires d = n - s";
        return out;
    }
    auto mu = numbered_names("mu", m);
    auto alpha = numbered_names("alpha", n);
    std::vector<std::string> vars = mu;
    vars.insert(vars.end(), alpha.begin(), alpha.end());
    PolynomialMatrix L(n, n, SparsePolynomial(vars));
    const auto& C = sys.C();
    const auto& M = sys.M();
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            SparsePolynomial e(vars);
            for (std::size_t l = 0; l < m; ++l) {
                if (C(i, l) == 0 || M(j, l) == 0) continue;
                Exponent x(vars.size(), 0);
                x[l] = 1;
                x[m + j] = 1;
                e.add_term(x, C(i, l) * Rational(M(j, l)));
            }
            L(i, j) = std::move(e);
        }
    for (std::size_t r = 0; r < inv.d; ++r)
        for (std::size_t j = 0; j < n; ++j) L(s + r, j) = SparsePolynomial::constant(vars, Rational(inv.A(r, j)));
    try {
        auto det = det_symbolic(L, vars);
        out.sign = sign_classify(det);
        out.determinant = std::move(det);
    } catch (const ToricityError& e) {
        if (e.kind() != ErrorKind::SizeGuard) throw;
        out.reason = e.what();
        return out;
    }
    if (out.sign == SignVerdict::AllPositive || out.sign == SignVerdict::AllNegative) {
        out.outcome = InjectivityOutcome::Toric;
        out.reason = "determinant coefficients share one sign";
    } else if (out.sign == SignVerdict::ZeroPolynomial) {
        out.reason = "determinant vanishes identically";
    } else {
        out.reason = "determinant has coefficients of both signs";
    }
    return out;
}

ConstantCosetConditions constant_coset_conditions(const VerticalSystem& sys, const InvarianceResult& inv,
                                                  Tri boundary) {
    ConstantCosetConditions out;
    out.boundary = boundary;
    const std::size_t n = sys.n(), s = sys.s();
    out.compact = positive_row_space(inv.A) ? Tri::Yes : Tri::No;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < sys.m(); ++j)
            if (sys.M()(i, j) < 0) {
                out.note = "M has negative entries; the criterion needs M >= 0";
                out.boundary = Tri::Unknown;
                return out;
            }
    if (inv.d + s != n) {
        out.note = "requires d = n - s";
        return out;
    }
    auto rays = extreme_rays(sys.C());
    if (rays.rays.empty()) {
        out.note = "no positive kernel vectors";
        return out;
    }
    if (n > 12) {
        out.note = "augmented matrix exceeds the symbolic determinant limit";
        return out;
    }
    std::vector<RationalVector> gens;
    for (const auto& r : rays.rays) {
        RationalVector v;
        for (const auto& z : r) v.emplace_back(z);
        gens.push_back(std::move(v));
    }
    auto lambda = numbered_names("lambda", gens.size());
    auto h = numbered_names("h", n);
    std::vector<std::string> vars = lambda;
    vars.insert(vars.end(), h.begin(), h.end());
    auto pattern = jacobian_pattern(sys, gens, lambda);
    PolynomialMatrix aug(n, n, SparsePolynomial(vars));
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < n; ++j)
            aug(i, j) = pattern(i, j).with_variables(vars) * SparsePolynomial::variable(vars, lambda.size() + j);
    for (std::size_t r = 0; r < inv.d; ++r)
        for (std::size_t j = 0; j < n; ++j) aug(s + r, j) = SparsePolynomial::constant(vars, Rational(inv.A(r, j)));
    auto det = det_symbolic(aug, vars);
    auto sv = sign_classify(det);
    out.nondegenerate = (sv == SignVerdict::AllPositive || sv == SignVerdict::AllNegative) ? Tri::Yes : Tri::Unknown;
    out.determinant = std::move(det);
    return out;
}

bool binomial_quickcheck(const VerticalSystem& sys) {
    auto basis = row_basis(sys.C());
    for (std::size_t i = 0; i < basis.rows(); ++i) {
        std::vector<std::size_t> support;
        for (std::size_t j = 0; j < basis.cols(); ++j)
            if (basis(i, j) != 0) support.push_back(j);
        if (support.size() > 2) return false;
        if (support.size() == 2 && sgn(basis(i, support[0])) == sgn(basis(i, support[1]))) return false;
    }
    return true;
}

VerticalSystem build_free_system(const std::vector<std::vector<LatticePoint>>& supports,
                                 const std::vector<std::vector<Rational>>& coefficients) {
    if (supports.empty()) throw ToricityError(ErrorKind::Precondition, "no supports given");
    if (!coefficients.empty() && coefficients.size() != supports.size()) {
        throw ToricityError(ErrorKind::DimensionMismatch, "one coefficient list per support is required");
    }
    std::size_t n = 0;
    bool have_dim = false;
    std::vector<std::vector<std::pair<LatticePoint, Rational>>> columns(supports.size());
    for (std::size_t b = 0; b < supports.size(); ++b) {
        if (!coefficients.empty() && coefficients[b].size() != supports[b].size()) {
            throw ToricityError(ErrorKind::DimensionMismatch, "coefficient count differs from support size");
        }
        for (std::size_t k = 0; k < supports[b].size(); ++k) {
            const auto& pt = supports[b][k];
            if (!have_dim) {
                n = pt.size();
                have_dim = true;
            } else if (pt.size() != n) {
                throw ToricityError(ErrorKind::DimensionMismatch, "support points of mixed dimension");
            }
            Rational c = coefficients.empty() ? Rational(1) : coefficients[b][k];
            if (c == 0) {
                columns[b].emplace_back(pt, 1);
                columns[b].emplace_back(pt, -1);
            } else {
                columns[b].emplace_back(pt, c);
            }
        }
    }
    std::size_t m = 0;
    for (const auto& col : columns) m += col.size();
    RationalMatrix C(supports.size(), m);
    IntegerMatrix M(n, m);
    std::size_t j = 0;
    for (std::size_t b = 0; b < columns.size(); ++b)
        for (const auto& [pt, c] : columns[b]) {
            C(b, j) = c;
            for (std::size_t i = 0; i < n; ++i) M(i, j) = Integer(static_cast<long>(pt[i]));
            ++j;
        }
    return VerticalSystem(std::move(C), std::move(M));
}

std::vector<SupportSet> coset_supports(const VerticalSystem& sys, const IntegerMatrix& A) {
    const std::size_t n = sys.n();
    std::vector<SupportSet> out;
    for (std::size_t i = 0; i < sys.s(); ++i) {
        std::vector<LatticePoint> pts;
        for (std::size_t j = 0; j < sys.m(); ++j) {
            if (sys.C()(i, j) == 0) continue;
            LatticePoint p(n);
            for (std::size_t k = 0; k < n; ++k) p[k] = sys.M()(k, j).get_si();
            pts.push_back(std::move(p));
        }
        out.emplace_back(std::move(pts));
    }
    for (std::size_t r = 0; r < A.rows(); ++r) {
        std::vector<LatticePoint> pts{LatticePoint(n, 0)};
        for (std::size_t k = 0; k < n; ++k) {
            if (A(r, k) == 0) continue;
            LatticePoint e(n, 0);
            e[k] = 1;
            pts.push_back(std::move(e));
        }
        out.emplace_back(std::move(pts));
    }
    return out;
}

}  // namespace toricity
