#pragma once

#include "toricity/matrix.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace toricity {

using Exponent = std::vector<std::uint32_t>;

/// Orders exponents so that map iteration runs through terms in descending
/// graded-lex order: higher total degree first, ties by lex (x1 > x2 > ...).
struct GradedLexDescending {
    bool operator()(const Exponent& a, const Exponent& b) const;
};

class SparsePolynomial {
public:
    using Terms = std::map<Exponent, Rational, GradedLexDescending>;

    SparsePolynomial() = default;
    explicit SparsePolynomial(std::vector<std::string> variables);

    static SparsePolynomial constant(std::vector<std::string> variables, const Rational& c);
    static SparsePolynomial variable(std::vector<std::string> variables, std::size_t index);
    static SparsePolynomial variable(std::vector<std::string> variables, const std::string& name);
    static SparsePolynomial monomial(std::vector<std::string> variables, Exponent e, const Rational& c);

    const std::vector<std::string>& variables() const noexcept { return vars_; }
    const Terms& terms() const noexcept { return terms_; }
    std::size_t term_count() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t variable_index(const std::string& name) const;

    std::uint32_t total_degree() const;
    std::uint32_t degree_in(std::size_t var) const;

    /// Adds c * x^e; zero results are dropped.
    void add_term(const Exponent& e, const Rational& c);

    SparsePolynomial& operator+=(const SparsePolynomial& o);
    SparsePolynomial& operator-=(const SparsePolynomial& o);
    SparsePolynomial& operator*=(const SparsePolynomial& o);
    SparsePolynomial scale(const Rational& c) const;
    SparsePolynomial operator-() const { return scale(-1); }

    friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) { return a += b; }
    friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) { return a -= b; }
    friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b);
    friend bool operator==(const SparsePolynomial& a, const SparsePolynomial& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }
    /// Comparison with a scalar, so that generic matrix code can skip zeros.
    friend bool operator==(const SparsePolynomial& a, int c) {
        if (c == 0) return a.terms_.empty();
        return a.terms_.size() == 1 && a.terms_.begin()->first == Exponent(a.vars_.size(), 0) &&
               a.terms_.begin()->second == c;
    }

    /// Replaces variable `var` by q (which must share this variable list).
    SparsePolynomial substitute(std::size_t var, const SparsePolynomial& q) const;

    /// Replaces selected variables by rational values, keeping the variable list.
    SparsePolynomial substitute_values(const std::map<std::size_t, Rational>& values) const;

    Rational evaluate(std::span<const Rational> point) const;
    double evaluate(std::span<const double> point) const;

    /// Partial derivative with respect to variable `var`.
    SparsePolynomial derivative(std::size_t var) const;

    /// Re-expresses the polynomial over another variable list, matching by
    /// name. Throws VariableMismatch when a used variable is missing.
    SparsePolynomial with_variables(const std::vector<std::string>& variables) const;

    /// Divides by the largest monomial dividing every term.
    SparsePolynomial strip_monomial_content() const;

    /// Canonical text: descending graded-lex, explicit `*` and `^`.
    std::string to_string() const;

private:
    void require_same_variables(const SparsePolynomial& o) const;

    std::vector<std::string> vars_;
    Terms terms_;
};

enum class SignVerdict { ZeroPolynomial, AllPositive, AllNegative, MixedSigns };

SignVerdict sign_classify(const SparsePolynomial& p);
const char* to_string(SignVerdict v);

using PolynomialMatrix = DenseMatrix<SparsePolynomial>;

/// Exact determinant by Laplace expansion with memoized minors. Rows are
/// visited sparsest first. Matrices larger than 12x12 are refused with
/// SizeGuard.
SparsePolynomial det_symbolic(const PolynomialMatrix& m, const std::vector<std::string>& variables);

/// Names v1..vk with a common prefix.
std::vector<std::string> numbered_names(const std::string& prefix, std::size_t count);

}  // namespace toricity
