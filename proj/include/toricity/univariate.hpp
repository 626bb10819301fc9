#pragma once

#include "toricity/polynomial.hpp"

#include <optional>
#include <vector>

namespace toricity {

/// Dense univariate polynomial, coefficients from the constant term upward.
class UnivariatePolynomial {
public:
    UnivariatePolynomial() = default;
    explicit UnivariatePolynomial(std::vector<Rational> coefficients);

    /// Converts a SparsePolynomial in at most one variable.
    static UnivariatePolynomial from_sparse(const SparsePolynomial& p);

    const std::vector<Rational>& coefficients() const noexcept { return c_; }
    bool is_zero() const noexcept { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    const Rational& leading() const { return c_.back(); }

    Rational evaluate(const Rational& x) const;
    UnivariatePolynomial derivative() const;
    UnivariatePolynomial monic() const;

    friend UnivariatePolynomial operator-(const UnivariatePolynomial& p);
    friend bool operator==(const UnivariatePolynomial& a, const UnivariatePolynomial& b) { return a.c_ == b.c_; }

    /// Sign of p just to the right of a (a+), or left of b (b-).
    int sign_right_of(const Rational& a) const;
    int sign_left_of(const Rational& b) const;
    int sign_at_pos_infinity() const;
    int sign_at_neg_infinity() const;

private:
    void trim();
    std::vector<Rational> c_;
};

UnivariatePolynomial remainder(const UnivariatePolynomial& a, const UnivariatePolynomial& b);
UnivariatePolynomial quotient(const UnivariatePolynomial& a, const UnivariatePolynomial& b);
UnivariatePolynomial gcd(UnivariatePolynomial a, UnivariatePolynomial b);
UnivariatePolynomial squarefree_part(const UnivariatePolynomial& p);

std::vector<UnivariatePolynomial> sturm_sequence(const UnivariatePolynomial& p);

/// Number of distinct real roots in the open interval (lo, hi); a missing
/// bound means infinity. Throws ZeroPolynomial for p = 0.
std::size_t count_roots_in_interval(const UnivariatePolynomial& p, const std::optional<Rational>& lo,
                                    const std::optional<Rational>& hi);

/// Number of distinct roots in (0, inf).
std::size_t sturm_positive_roots(const UnivariatePolynomial& p);
std::size_t sturm_positive_roots(const SparsePolynomial& p);

}  // namespace toricity
