#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "oracles.hpp"

#include "toricity/polynomial.hpp"
#include "toricity/univariate.hpp"

using namespace toricity;

namespace {

const std::vector<std::string> xy{"x1", "x2"};

SparsePolynomial var(const std::vector<std::string>& vars, std::size_t i) {
    return SparsePolynomial::variable(vars, i);
}

SparsePolynomial cst(const std::vector<std::string>& vars, long c) {
    return SparsePolynomial::constant(vars, Rational(c));
}

UnivariatePolynomial from_roots(std::initializer_list<long> roots) {
    std::vector<Rational> acc{1};
    for (long r : roots) {
        std::vector<Rational> next(acc.size() + 1, Rational(0));
        for (std::size_t i = 0; i < acc.size(); ++i) {
            next[i + 1] += acc[i];
            next[i] -= acc[i] * r;
        }
        acc = next;
    }
    return UnivariatePolynomial(acc);
}

}  // namespace

TEST_CASE("sparse polynomial arithmetic") {
    std::vector<std::string> x{"x"};
    auto p = (var(x, 0) + cst(x, 1)) * (var(x, 0) - cst(x, 1));
    CHECK(p == var(x, 0) * var(x, 0) - cst(x, 1));
    CHECK(p.to_string() == "x^2 - 1");
    CHECK((p + (-p)).is_zero());
    CHECK(p.derivative(0) == var(x, 0).scale(2));
    CHECK(p.total_degree() == 2);
}

TEST_CASE("variable handling") {
    auto p = var(xy, 0) * var(xy, 1);
    auto q = p.with_variables({"x2", "y", "x1"});
    CHECK(q.variables() == std::vector<std::string>{"x2", "y", "x1"});
    CHECK(q.evaluate(fixtures::vec({"2", "7", "3"})) == 6);
    CHECK_THROWS_AS(p.with_variables({"x1"}), ToricityError);
    CHECK_THROWS_AS(p + var({"a", "b"}, 0), ToricityError);
}

TEST_CASE("substitution on the triangle slice") {
    // F at kappa = (1,1,1,1): x2^4 - 2 x1^6, restricted to 2 x1 + 3 x2 = 5.
    auto sys = fixtures::triangle();
    auto f = sys.polynomials(fixtures::vec({"1", "1", "1", "1"}))[0].with_variables(xy);
    auto x2 = (cst(xy, 5) - var(xy, 0).scale(2)).scale(Rational(1, 3));
    auto g = f.substitute(1, x2);
    CHECK(g.degree_in(1) == 0);
    auto u = UnivariatePolynomial::from_sparse(g.with_variables({"x1"}));
    CHECK(u.degree() == 6);
    // Direct expansion of ((5 - 2t)/3)^4 - 2 t^6 at t = 0, 1, 2.
    CHECK(u.evaluate(0) == Rational(625, 81));
    CHECK(u.evaluate(1) == -1);
    CHECK(u.evaluate(2) == Rational(1, 81) - 128);
    CHECK(count_roots_in_interval(u, Rational(0), Rational(5, 2)) == 1);
    CHECK(sturm_positive_roots(u) == 1);
}

TEST_CASE("symbolic determinants") {
    auto a = numbered_names("a", 3);
    PolynomialMatrix d(3, 3, SparsePolynomial(a));
    for (std::size_t i = 0; i < 3; ++i) d(i, i) = var(a, i);
    CHECK(det_symbolic(d, a) == var(a, 0) * var(a, 1) * var(a, 2));

    // 2x2 with polynomial entries against the expansion by hand
    PolynomialMatrix m(2, 2, SparsePolynomial(xy));
    m(0, 0) = var(xy, 0);
    m(0, 1) = cst(xy, 2);
    m(1, 0) = var(xy, 1);
    m(1, 1) = var(xy, 0) + var(xy, 1);
    auto det = det_symbolic(m, xy);
    CHECK(det == var(xy, 0) * var(xy, 0) + var(xy, 0) * var(xy, 1) - var(xy, 1).scale(2));

    PolynomialMatrix big(13, 13, SparsePolynomial(xy));
    CHECK_THROWS_AS(det_symbolic(big, xy), ToricityError);
}

TEST_CASE("sign classification") {
    CHECK(sign_classify(var(xy, 0) * var(xy, 1) - var(xy, 1) * var(xy, 1)) == SignVerdict::MixedSigns);
    CHECK(sign_classify(SparsePolynomial(xy)) == SignVerdict::ZeroPolynomial);
    CHECK(sign_classify(var(xy, 0) + cst(xy, 3)) == SignVerdict::AllPositive);
    CHECK(sign_classify(-(var(xy, 0) * var(xy, 1))) == SignVerdict::AllNegative);
}

TEST_CASE("Sturm root counts") {
    CHECK(sturm_positive_roots(from_roots({1, -1})) == 1);
    CHECK(sturm_positive_roots(from_roots({1, 2, -3})) == 2);
    CHECK(count_roots_in_interval(from_roots({1, 2, -3}), std::nullopt, std::nullopt) == 3);
    CHECK(count_roots_in_interval(from_roots({1, 2, -3}), Rational(1), Rational(2)) == 0);
    // repeated roots are counted once
    CHECK(sturm_positive_roots(from_roots({2, 2, 5})) == 2);
    // x^2 + 1 has no real roots
    CHECK(sturm_positive_roots(UnivariatePolynomial(fixtures::vec({"1", "0", "1"}))) == 0);
    CHECK_THROWS_AS(sturm_positive_roots(UnivariatePolynomial()), ToricityError);

    auto p = from_roots({1, 3, 4, -2});
    auto oracle_count = oracle::grid_root_count([&](const Rational& x) { return p.evaluate(x); }, Rational(0),
                                                Rational(10), Rational(1, 8));
    CHECK(sturm_positive_roots(p) == oracle_count);
}

TEST_CASE("univariate helpers") {
    auto p = from_roots({1, 1, 2});
    auto sf = squarefree_part(p);
    CHECK(sf.degree() == 2);
    CHECK(sf.monic() == from_roots({1, 2}));
    CHECK(gcd(p, p.derivative()).monic() == from_roots({1}));
    CHECK(remainder(from_roots({1, 2}), from_roots({1})).is_zero());
}
