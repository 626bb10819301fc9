#include "toricity/toricity.hpp"
#include "toricity/univariate.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

namespace toricity {

const char* to_string(CountKind v) {
    switch (v) {
        case CountKind::Exact: return "Exact";
        case CountKind::Heuristic: return "Heuristic";
        case CountKind::Exported: return "Exported";
        case CountKind::Inconclusive: return "Inconclusive";
    }
    return "?";
}

std::vector<SparsePolynomial> CosetCountingSystem::linear_equations() const {
    const auto& vars = base.variables();
    std::vector<SparsePolynomial> out;
    for (std::size_t r = 0; r < A.rows(); ++r) {
        SparsePolynomial e = SparsePolynomial::constant(vars, -b[r]);
        for (std::size_t i = 0; i < A.cols(); ++i)
            if (A(r, i) != 0) e += SparsePolynomial::variable(vars, i).scale(Rational(A(r, i)));
        out.push_back(std::move(e));
    }
    return out;
}

CosetCountingSystem coset_counting_system_at(const VerticalSystem& sys, const InvarianceResult& inv,
                                             std::span<const Rational> kappa, std::span<const Rational> p) {
    if (inv.d + sys.s() != sys.n()) {
        throw ToricityError(ErrorKind::Precondition, "coset counting needs d = n - s");
    }
    if (kappa.size() != sys.m()) {
        throw ToricityError(ErrorKind::DimensionMismatch,
                            "kappa has " + std::to_string(kappa.size()) + " entries, expected " + std::to_string(sys.m()));
    }
    for (const auto& k : kappa)
        if (k <= 0) throw ToricityError(ErrorKind::Precondition, "kappa must be strictly positive");
    if (p.size() != sys.n()) throw ToricityError(ErrorKind::DimensionMismatch, "p has the wrong length");
    for (const auto& q : p)
        if (q <= 0) throw ToricityError(ErrorKind::Precondition, "p must be strictly positive");
    RationalVector pv(p.begin(), p.end());
    RationalVector b = multiply(to_rational(inv.A), pv);
    return CosetCountingSystem{sys, inv.A, RationalVector(kappa.begin(), kappa.end()), std::move(b), std::move(pv)};
}

CosetCountingSystem coset_counting_system(const VerticalSystem& sys, const InvarianceResult& inv,
                                          std::span<const Rational> kappa, std::uint64_t seed) {
    std::mt19937_64 gen(seed ^ 0x636f736574707074ULL);
    RationalVector p(sys.n());
    for (auto& q : p) {
        q = Rational(static_cast<long>(1 + gen() % 64), 8);
        q.canonicalize();
    }
    return coset_counting_system_at(sys, inv, kappa, p);
}

std::string exchange_format(const CosetCountingSystem& h) {
    std::ostringstream os;
    os << "# coset counting system\n# kappa =";
    for (std::size_t j = 0; j < h.kappa.size(); ++j) os << (j ? ", " : " ") << h.kappa[j].get_str();
    os << "\nvariables";
    for (const auto& v : h.base.variables()) os << ' ' << v;
    auto polys = h.polynomials();
    os << "\npolynomials " << polys.size() << '\n';
    for (const auto& p : polys) os << p.to_string() << '\n';
    auto lin = h.linear_equations();
    os << "linear " << lin.size() << '\n';
    for (const auto& p : lin) os << p.to_string() << '\n';
    return os.str();
}

namespace {

CountResult count_on_line(const CosetCountingSystem& h) {
    CountResult out;
    const std::size_t n = h.base.n();
    RationalMatrix K = kernel_matrix(to_rational(h.A));
    if (K.cols() != 1) {
        throw ToricityError(ErrorKind::DegenerateSlice,
                            "the linear part has a " + std::to_string(K.cols()) + "-dimensional solution space");
    }
    auto v = primitive_integer_vector(K.column(0));
    // positive segment of x = p + t v
    std::optional<Rational> lo, hi;
    for (std::size_t i = 0; i < n; ++i) {
        if (v[i] == 0) continue;
        Rational bound = -h.p[i] / Rational(v[i]);
        if (v[i] > 0) {
            if (!lo || bound > *lo) lo = bound;
        } else {
            if (!hi || bound < *hi) hi = bound;
        }
    }
    std::vector<std::string> t{"t"};
    std::vector<SparsePolynomial> line;
    for (std::size_t i = 0; i < n; ++i)
        line.push_back(SparsePolynomial::constant(t, h.p[i]) + SparsePolynomial::variable(t, 0).scale(Rational(v[i])));
    const auto f = h.polynomials().front();
    SparsePolynomial u(t);
    std::vector<std::vector<SparsePolynomial>> powers(n);
    for (const auto& [e, c] : f.terms()) {
        SparsePolynomial term = SparsePolynomial::constant(t, c);
        for (std::size_t i = 0; i < n; ++i) {
            if (e[i] == 0) continue;
            auto& pw = powers[i];
            if (pw.empty()) pw.push_back(SparsePolynomial::constant(t, 1));
            while (pw.size() <= e[i]) pw.push_back(pw.back() * line[i]);
            term *= pw[e[i]];
        }
        u += term;
    }
    if (u.is_zero()) {
        out.detail = "F vanishes identically on the slice";
        return out;
    }
    out.kind = CountKind::Exact;
    out.count = count_roots_in_interval(UnivariatePolynomial::from_sparse(u), lo, hi);
    std::ostringstream os;
    os << "Sturm count on x = p + t*v, t in (" << (lo ? lo->get_str() : "-inf") << ", "
       << (hi ? hi->get_str() : "inf") << "), degree " << u.total_degree();
    out.detail = os.str();
    return out;
}

struct DoubleTerm {
    double c;
    std::vector<std::uint32_t> e;
};

struct DoublePoly {
    std::vector<DoubleTerm> terms;

    explicit DoublePoly(const SparsePolynomial& p) {
        for (const auto& [e, c] : p.terms()) terms.push_back({c.get_d(), e});
    }

    // value, scale = sum |terms|, and gradient with respect to log x
    double eval(const std::vector<double>& x, double& scale, std::vector<double>* grad_log) const {
        double v = 0;
        scale = 0;
        if (grad_log) std::fill(grad_log->begin(), grad_log->end(), 0.0);
        for (const auto& t : terms) {
            double m = t.c;
            for (std::size_t i = 0; i < x.size(); ++i)
                if (t.e[i]) m *= std::pow(x[i], static_cast<double>(t.e[i]));
            v += m;
            scale += std::fabs(m);
            if (grad_log)
                for (std::size_t i = 0; i < x.size(); ++i)
                    if (t.e[i]) (*grad_log)[i] += m * t.e[i];
        }
        return v;
    }
};

CountResult count_by_newton(const CosetCountingSystem& h, const CountOptions& options) {
    CountResult out;
    const std::size_t n = h.base.n();
    std::vector<DoublePoly> eqs;
    for (const auto& p : h.polynomials()) eqs.emplace_back(p);
    for (const auto& p : h.linear_equations()) eqs.emplace_back(p);
    if (eqs.size() != n) {
        out.detail = "system is not square";
        return out;
    }

    auto residual = [&](const std::vector<double>& x, Eigen::VectorXd* f, Eigen::MatrixXd* jac) {
        double worst = 0;
        std::vector<double> g(n);
        for (std::size_t r = 0; r < n; ++r) {
            double scale = 0;
            double v = eqs[r].eval(x, scale, jac ? &g : nullptr);
            double s = scale > 0 ? scale : 1.0;
            if (f) (*f)(static_cast<Eigen::Index>(r)) = v / s;
            if (jac)
                for (std::size_t i = 0; i < n; ++i)
                    (*jac)(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(i)) = g[i] / s;
            worst = std::max(worst, std::fabs(v) / s);
        }
        return worst;
    };

    std::mt19937_64 gen(options.seed ^ 0x6e6577746f6e2121ULL);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<double> center(n);
    for (std::size_t i = 0; i < n; ++i) center[i] = std::log(h.p[i].get_d());
    const double spreads[] = {0.5, 1.0, 2.0, 4.0};

    std::vector<std::vector<double>> found;
    for (std::size_t start = 0; start < options.starts; ++start) {
        double spread = spreads[start % 4];
        std::vector<double> y(n);
        for (std::size_t i = 0; i < n; ++i) y[i] = center[i] + spread * normal(gen);
        auto to_x = [&](const std::vector<double>& yy) {
            std::vector<double> x(n);
            for (std::size_t i = 0; i < n; ++i) x[i] = std::exp(yy[i]);
            return x;
        };
        Eigen::VectorXd f(n);
        Eigen::MatrixXd jac(n, n);
        std::vector<double> x = to_x(y);
        double res = residual(x, &f, &jac);
        bool converged = false;
        for (int it = 0; it < 200 && std::isfinite(res); ++it) {
            if (res < 1e-12) {
                converged = true;
                break;
            }
            Eigen::VectorXd step = jac.fullPivLu().solve(-f);
            if (!step.allFinite()) break;
            double damping = 1.0;
            bool improved = false;
            for (int ls = 0; ls < 40; ++ls) {
                std::vector<double> ny(n);
                for (std::size_t i = 0; i < n; ++i) ny[i] = y[i] + damping * step(static_cast<Eigen::Index>(i));
                auto nx = to_x(ny);
                double nres = residual(nx, nullptr, nullptr);
                if (std::isfinite(nres) && nres < res) {
                    y = std::move(ny);
                    x = std::move(nx);
                    res = residual(x, &f, &jac);
                    improved = true;
                    break;
                }
                damping *= 0.5;
            }
            if (!improved) {
                converged = res < 1e-12;
                break;
            }
        }
        if (!converged) continue;
        if (std::any_of(x.begin(), x.end(), [](double v) { return !(v > 1e-9) || !std::isfinite(v); })) continue;
        bool duplicate = false;
        for (const auto& s : found) {
            double norm = 1.0, diff = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                norm = std::max(norm, std::fabs(s[i]));
                diff = std::max(diff, std::fabs(s[i] - x[i]));
            }
            if (diff / norm < 1e-6) {
                duplicate = true;
                break;
            }
        }
        if (!duplicate) found.push_back(x);
    }
    std::sort(found.begin(), found.end());
    out.kind = CountKind::Heuristic;
    out.count = found.size();
    out.solutions = std::move(found);
    out.detail = "multistart Newton in log coordinates, " + std::to_string(options.starts) + " starts";
    return out;
}

}  // namespace

CountResult count_positive_cosets(const CosetCountingSystem& h, const CountOptions& options) {
    if (options.export_path) {
        std::ofstream f(*options.export_path);
        if (!f) throw ToricityError(ErrorKind::Precondition, "cannot write " + *options.export_path);
        f << exchange_format(h);
        CountResult out;
        out.kind = CountKind::Exported;
        out.detail = "written to " + *options.export_path;
        return out;
    }
    if (h.base.s() == 1) return count_on_line(h);
    return count_by_newton(h, options);
}

}  // namespace toricity
