#include "toricity/univariate.hpp"

namespace toricity {

UnivariatePolynomial::UnivariatePolynomial(std::vector<Rational> coefficients) : c_(std::move(coefficients)) {
    trim();
}

void UnivariatePolynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UnivariatePolynomial UnivariatePolynomial::from_sparse(const SparsePolynomial& p) {
    std::size_t var = 0;
    std::size_t used = 0;
    for (std::size_t i = 0; i < p.variables().size(); ++i)
        if (p.degree_in(i) > 0) {
            var = i;
            ++used;
        }
    if (used > 1) {
        throw ToricityError(ErrorKind::VariableMismatch, "polynomial is not univariate: " + p.to_string());
    }
    std::vector<Rational> c;
    for (const auto& [e, q] : p.terms()) {
        std::size_t k = e.empty() ? 0 : e[var];
        if (c.size() <= k) c.resize(k + 1);
        c[k] += q;
    }
    return UnivariatePolynomial(std::move(c));
}

Rational UnivariatePolynomial::evaluate(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UnivariatePolynomial UnivariatePolynomial::derivative() const {
    std::vector<Rational> d;
    for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * static_cast<unsigned long>(k));
    return UnivariatePolynomial(std::move(d));
}

UnivariatePolynomial UnivariatePolynomial::monic() const {
    if (c_.empty()) return *this;
    std::vector<Rational> out = c_;
    Rational lc = c_.back();
    for (auto& q : out) q /= lc;
    return UnivariatePolynomial(std::move(out));
}

UnivariatePolynomial operator-(const UnivariatePolynomial& p) {
    std::vector<Rational> out = p.c_;
    for (auto& q : out) q = -q;
    return UnivariatePolynomial(std::move(out));
}

int UnivariatePolynomial::sign_right_of(const Rational& a) const {
    // first nonzero Taylor coefficient at a
    UnivariatePolynomial d = *this;
    while (!d.is_zero()) {
        int s = sgn(d.evaluate(a));
        if (s != 0) return s;
        d = d.derivative();
    }
    return 0;
}

int UnivariatePolynomial::sign_left_of(const Rational& b) const {
    UnivariatePolynomial d = *this;
    int flip = 1;
    while (!d.is_zero()) {
        int s = sgn(d.evaluate(b));
        if (s != 0) return s * flip;
        d = d.derivative();
        flip = -flip;
    }
    return 0;
}

int UnivariatePolynomial::sign_at_pos_infinity() const { return c_.empty() ? 0 : sgn(c_.back()); }

int UnivariatePolynomial::sign_at_neg_infinity() const {
    if (c_.empty()) return 0;
    int s = sgn(c_.back());
    return (degree() % 2) ? -s : s;
}

namespace {
void divide(const UnivariatePolynomial& a, const UnivariatePolynomial& b, UnivariatePolynomial* q,
            UnivariatePolynomial* r) {
    if (b.is_zero()) throw ToricityError(ErrorKind::ZeroPolynomial, "division by the zero polynomial");
    std::vector<Rational> rem = a.coefficients();
    const auto& bc = b.coefficients();
    const int db = b.degree();
    std::vector<Rational> quo(rem.size() >= bc.size() ? rem.size() - bc.size() + 1 : 0);
    for (int k = static_cast<int>(rem.size()) - 1; k >= db; --k) {
        if (rem[k] == 0) continue;
        Rational f = rem[k] / bc.back();
        quo[k - db] = f;
        for (int j = 0; j <= db; ++j) rem[k - db + j] -= f * bc[j];
    }
    if (q) *q = UnivariatePolynomial(std::move(quo));
    if (r) *r = UnivariatePolynomial(std::move(rem));
}
}  // namespace

UnivariatePolynomial remainder(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
    UnivariatePolynomial r;
    divide(a, b, nullptr, &r);
    return r;
}

UnivariatePolynomial quotient(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
    UnivariatePolynomial q;
    divide(a, b, &q, nullptr);
    return q;
}

UnivariatePolynomial gcd(UnivariatePolynomial a, UnivariatePolynomial b) {
    while (!b.is_zero()) {
        UnivariatePolynomial r = remainder(a, b);
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

UnivariatePolynomial squarefree_part(const UnivariatePolynomial& p) {
    if (p.degree() <= 0) return p;
    UnivariatePolynomial g = gcd(p, p.derivative());
    return quotient(p, g);
}

std::vector<UnivariatePolynomial> sturm_sequence(const UnivariatePolynomial& p) {
    std::vector<UnivariatePolynomial> seq;
    if (p.is_zero()) return seq;
    seq.push_back(p);
    UnivariatePolynomial d = p.derivative();
    if (d.is_zero()) return seq;
    seq.push_back(d);
    while (true) {
        UnivariatePolynomial r = remainder(seq[seq.size() - 2], seq.back());
        if (r.is_zero()) break;
        // only the sign of each member matters, so normalize magnitudes
        Rational lc = abs(r.leading());
        std::vector<Rational> c = r.coefficients();
        for (auto& q : c) q = -q / lc;
        seq.emplace_back(std::move(c));
    }
    return seq;
}

namespace {
std::size_t variations(const std::vector<int>& signs) {
    std::size_t v = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}
}  // namespace

std::size_t count_roots_in_interval(const UnivariatePolynomial& p, const std::optional<Rational>& lo,
                                    const std::optional<Rational>& hi) {
    if (p.is_zero()) throw ToricityError(ErrorKind::ZeroPolynomial, "cannot count roots of the zero polynomial");
    if (lo && hi && *lo >= *hi) return 0;
    UnivariatePolynomial sf = squarefree_part(p);
    auto seq = sturm_sequence(sf);
    std::vector<int> at_lo, at_hi;
    for (const auto& q : seq) {
        at_lo.push_back(lo ? q.sign_right_of(*lo) : q.sign_at_neg_infinity());
        at_hi.push_back(hi ? q.sign_left_of(*hi) : q.sign_at_pos_infinity());
    }
    std::size_t vl = variations(at_lo), vh = variations(at_hi);
    return vl >= vh ? vl - vh : 0;
}

std::size_t sturm_positive_roots(const UnivariatePolynomial& p) {
    return count_roots_in_interval(p, Rational(0), std::nullopt);
}

std::size_t sturm_positive_roots(const SparsePolynomial& p) {
    return sturm_positive_roots(UnivariatePolynomial::from_sparse(p));
}

}  // namespace toricity
