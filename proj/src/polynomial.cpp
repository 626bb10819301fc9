#include "toricity/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace toricity {

bool GradedLexDescending::operator()(const Exponent& a, const Exponent& b) const {
    std::uint64_t da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
    std::uint64_t db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

SparsePolynomial::SparsePolynomial(std::vector<std::string> variables) : vars_(std::move(variables)) {}

SparsePolynomial SparsePolynomial::constant(std::vector<std::string> variables, const Rational& c) {
    SparsePolynomial p(std::move(variables));
    p.add_term(Exponent(p.vars_.size(), 0), c);
    return p;
}

SparsePolynomial SparsePolynomial::variable(std::vector<std::string> variables, std::size_t index) {
    SparsePolynomial p(std::move(variables));
    if (index >= p.vars_.size()) throw ToricityError(ErrorKind::VariableMismatch, "variable index out of range");
    Exponent e(p.vars_.size(), 0);
    e[index] = 1;
    p.add_term(e, 1);
    return p;
}

SparsePolynomial SparsePolynomial::variable(std::vector<std::string> variables, const std::string& name) {
    SparsePolynomial p(std::move(variables));
    return variable(p.vars_, p.variable_index(name));
}

SparsePolynomial SparsePolynomial::monomial(std::vector<std::string> variables, Exponent e, const Rational& c) {
    SparsePolynomial p(std::move(variables));
    if (e.size() != p.vars_.size()) throw ToricityError(ErrorKind::VariableMismatch, "exponent length mismatch");
    p.add_term(e, c);
    return p;
}

std::size_t SparsePolynomial::variable_index(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) throw ToricityError(ErrorKind::VariableMismatch, "unknown variable '" + name + "'");
    return static_cast<std::size_t>(it - vars_.begin());
}

std::uint32_t SparsePolynomial::total_degree() const {
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0u));
    return d;
}

std::uint32_t SparsePolynomial::degree_in(std::size_t var) const {
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

void SparsePolynomial::add_term(const Exponent& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void SparsePolynomial::require_same_variables(const SparsePolynomial& o) const {
    if (vars_ != o.vars_) {
        throw ToricityError(ErrorKind::VariableMismatch, "polynomials over different variable lists");
    }
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& o) {
    if (o.terms_.empty() && o.vars_.empty()) return *this;
    if (vars_.empty() && terms_.empty()) vars_ = o.vars_;
    require_same_variables(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

SparsePolynomial& SparsePolynomial::operator-=(const SparsePolynomial& o) {
    if (o.terms_.empty() && o.vars_.empty()) return *this;
    if (vars_.empty() && terms_.empty()) vars_ = o.vars_;
    require_same_variables(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
    a.require_same_variables(b);
    SparsePolynomial out(a.vars_);
    if (a.terms_.empty() || b.terms_.empty()) return out;
    Exponent e(a.vars_.size());
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

SparsePolynomial& SparsePolynomial::operator*=(const SparsePolynomial& o) {
    *this = *this * o;
    return *this;
}

SparsePolynomial SparsePolynomial::scale(const Rational& c) const {
    SparsePolynomial out(vars_);
    if (c == 0) return out;
    for (const auto& [e, q] : terms_) out.terms_.emplace_hint(out.terms_.end(), e, q * c);
    return out;
}

SparsePolynomial SparsePolynomial::substitute(std::size_t var, const SparsePolynomial& q) const {
    require_same_variables(q);
    // group by power of var, then Horner-free accumulation with cached powers
    std::map<std::uint32_t, SparsePolynomial> by_power;
    for (const auto& [e, c] : terms_) {
        Exponent rest = e;
        std::uint32_t k = rest[var];
        rest[var] = 0;
        auto [it, _] = by_power.try_emplace(k, SparsePolynomial(vars_));
        it->second.add_term(rest, c);
    }
    SparsePolynomial out(vars_);
    SparsePolynomial power = constant(vars_, 1);
    std::uint32_t current = 0;
    for (auto& [k, coeff] : by_power) {
        while (current < k) {
            power = power * q;
            ++current;
        }
        out += coeff * power;
    }
    return out;
}

SparsePolynomial SparsePolynomial::substitute_values(const std::map<std::size_t, Rational>& values) const {
    SparsePolynomial out(vars_);
    for (const auto& [e, c] : terms_) {
        Rational coeff = c;
        Exponent rest = e;
        for (const auto& [var, v] : values) {
            if (rest[var] == 0) continue;
            Rational pw;
            mpz_pow_ui(pw.get_num_mpz_t(), v.get_num_mpz_t(), rest[var]);
            mpz_pow_ui(pw.get_den_mpz_t(), v.get_den_mpz_t(), rest[var]);
            coeff *= pw;
            rest[var] = 0;
        }
        out.add_term(rest, coeff);
    }
    return out;
}

Rational SparsePolynomial::evaluate(std::span<const Rational> point) const {
    if (point.size() != vars_.size()) throw ToricityError(ErrorKind::VariableMismatch, "evaluation point length mismatch");
    Rational total = 0;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            Rational pw;
            mpz_pow_ui(pw.get_num_mpz_t(), point[i].get_num_mpz_t(), e[i]);
            mpz_pow_ui(pw.get_den_mpz_t(), point[i].get_den_mpz_t(), e[i]);
            t *= pw;
        }
        total += t;
    }
    return total;
}

double SparsePolynomial::evaluate(std::span<const double> point) const {
    if (point.size() != vars_.size()) throw ToricityError(ErrorKind::VariableMismatch, "evaluation point length mismatch");
    double total = 0;
    for (const auto& [e, c] : terms_) {
        double t = c.get_d();
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i]) t *= std::pow(point[i], static_cast<double>(e[i]));
        total += t;
    }
    return total;
}

SparsePolynomial SparsePolynomial::derivative(std::size_t var) const {
    SparsePolynomial out(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponent d = e;
        --d[var];
        out.add_term(d, c * e[var]);
    }
    return out;
}

SparsePolynomial SparsePolynomial::with_variables(const std::vector<std::string>& variables) const {
    std::vector<std::size_t> map(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::find(variables.begin(), variables.end(), vars_[i]);
        if (it == variables.end()) {
            if (degree_in(i) == 0) {
                map[i] = variables.size();
                continue;
            }
            throw ToricityError(ErrorKind::VariableMismatch, "variable '" + vars_[i] + "' missing from target list");
        }
        map[i] = static_cast<std::size_t>(it - variables.begin());
    }
    SparsePolynomial out(variables);
    for (const auto& [e, c] : terms_) {
        Exponent f(variables.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i]) f[map[i]] += e[i];
        out.add_term(f, c);
    }
    return out;
}

SparsePolynomial SparsePolynomial::strip_monomial_content() const {
    if (terms_.empty()) return *this;
    Exponent low = terms_.begin()->first;
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < e.size(); ++i) low[i] = std::min(low[i], e[i]);
    SparsePolynomial out(vars_);
    for (const auto& [e, c] : terms_) {
        Exponent f = e;
        for (std::size_t i = 0; i < f.size(); ++i) f[i] -= low[i];
        out.add_term(f, c);
    }
    return out;
}

std::string SparsePolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational mag = abs(c);
        bool neg = c < 0;
        if (first) {
            if (neg) os << '-';
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        bool constant_term = std::all_of(e.begin(), e.end(), [](auto k) { return k == 0; });
        bool wrote = false;
        if (mag != 1 || constant_term) {
            os << mag.get_str();
            wrote = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (wrote) os << '*';
            os << vars_[i];
            if (e[i] > 1) os << '^' << e[i];
            wrote = true;
        }
    }
    return os.str();
}

SignVerdict sign_classify(const SparsePolynomial& p) {
    if (p.is_zero()) return SignVerdict::ZeroPolynomial;
    bool pos = false, neg = false;
    for (const auto& [e, c] : p.terms()) (c > 0 ? pos : neg) = true;
    if (pos && neg) return SignVerdict::MixedSigns;
    return pos ? SignVerdict::AllPositive : SignVerdict::AllNegative;
}

const char* to_string(SignVerdict v) {
    switch (v) {
        case SignVerdict::ZeroPolynomial: return "ZeroPolynomial";
        case SignVerdict::AllPositive: return "AllPositive";
        case SignVerdict::AllNegative: return "AllNegative";
        case SignVerdict::MixedSigns: return "MixedSigns";
    }
    return "?";
}

namespace {

struct DetMemo {
    const PolynomialMatrix* m;
    std::vector<std::size_t> row_order;
    std::vector<std::string> vars;
    std::unordered_map<std::uint32_t, SparsePolynomial> memo;

    // determinant of rows row_order[k..n-1] restricted to the columns in mask
    SparsePolynomial minor(std::size_t k, std::uint32_t mask) {
        const std::size_t n = m->rows();
        if (k == n) return SparsePolynomial::constant(vars, 1);
        if (auto it = memo.find(mask); it != memo.end()) return it->second;
        SparsePolynomial total(vars);
        std::size_t r = row_order[k];
        int position = 0;  // rank of column among those still in the mask
        for (std::size_t c = 0; c < n; ++c) {
            if (!(mask & (1u << c))) continue;
            const auto& entry = (*m)(r, c);
            if (!entry.is_zero()) {
                SparsePolynomial sub = minor(k + 1, mask & ~(1u << c));
                if (!sub.is_zero()) {
                    SparsePolynomial term = entry * sub;
                    if (position % 2) total -= term;
                    else total += term;
                }
            }
            ++position;
        }
        memo.emplace(mask, total);
        return total;
    }
};

}  // namespace

SparsePolynomial det_symbolic(const PolynomialMatrix& m, const std::vector<std::string>& variables) {
    if (m.rows() != m.cols()) throw ToricityError(ErrorKind::DimensionMismatch, "det_symbolic: matrix not square");
    const std::size_t n = m.rows();
    if (n > 12) {
        throw ToricityError(ErrorKind::SizeGuard,
                            "symbolic determinant of a " + std::to_string(n) + "x" + std::to_string(n) +
                                " matrix exceeds the 12x12 limit; use randomized rank evaluation instead");
    }
    PolynomialMatrix a(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            a(r, c) = m(r, c).is_zero() ? SparsePolynomial(variables) : m(r, c).with_variables(variables);

    DetMemo d{&a, {}, variables, {}};
    std::vector<std::size_t> nnz(n, 0);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) nnz[r] += a(r, c).is_zero() ? 0 : 1;
    d.row_order.resize(n);
    std::iota(d.row_order.begin(), d.row_order.end(), std::size_t{0});
    std::stable_sort(d.row_order.begin(), d.row_order.end(),
                     [&](std::size_t x, std::size_t y) { return nnz[x] < nnz[y]; });
    // sign of the row permutation
    int sign = 1;
    std::vector<std::size_t> perm = d.row_order;
    for (std::size_t i = 0; i < n; ++i)
        while (perm[i] != i) {
            std::swap(perm[i], perm[perm[i]]);
            sign = -sign;
        }
    SparsePolynomial det = d.minor(0, n == 0 ? 0u : (n == 32 ? ~0u : ((1u << n) - 1)));
    return sign < 0 ? -det : det;
}

std::vector<std::string> numbered_names(const std::string& prefix, std::size_t count) {
    std::vector<std::string> out;
    out.reserve(count);
    for (std::size_t i = 1; i <= count; ++i) out.push_back(prefix + std::to_string(i));
    return out;
}

}  // namespace toricity
