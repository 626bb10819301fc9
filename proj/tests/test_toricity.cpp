#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "oracles.hpp"

#include "toricity/toricity.hpp"

using namespace toricity;
using fixtures::Q;
using fixtures::Z;

namespace {

using Blocks = std::vector<std::vector<std::size_t>>;

/// The six-term determinant from the injectivity example, in our variable names.
SparsePolynomial idh_expected_determinant(const std::vector<std::string>& vars) {
    auto v = [&](const std::string& name) { return SparsePolynomial::variable(vars, name); };
    auto term = [&](std::initializer_list<const char*> names) {
        auto p = SparsePolynomial::constant(vars, Rational(-1));
        for (const char* n : names) p *= v(n);
        return p;
    };
    return term({"alpha1", "alpha3", "alpha4", "mu1", "mu3", "mu4"}) +
           term({"alpha1", "alpha4", "alpha5", "mu1", "mu4", "mu6"}) +
           term({"alpha2", "alpha3", "alpha4", "mu1", "mu3", "mu4"}) +
           term({"alpha2", "alpha4", "alpha5", "mu1", "mu4", "mu6"}) +
           term({"alpha3", "alpha4", "alpha5", "mu2", "mu4", "mu6"}) +
           term({"alpha3", "alpha4", "alpha5", "mu3", "mu4", "mu6"});
}

bool equal_up_to_sign(const SparsePolynomial& a, const SparsePolynomial& b) { return a == b || a == -b; }

}  // namespace

TEST_CASE("matroid partition") {
    CHECK(matroid_partition(fixtures::fig_first()).blocks == Blocks{{0, 1, 2}, {3, 4}});
    CHECK(matroid_partition(fixtures::idh()).blocks == Blocks{{0, 1, 2, 3, 4, 5}});
    VerticalSystem split(Q({{1, -1, 0, 0}, {0, 0, 1, -1}}), Z({{1, 0, 1, 0}, {0, 1, 0, 1}}));
    CHECK(matroid_partition(split).blocks == Blocks{{0, 1}, {2, 3}});
    CHECK(matroid_partition(split).blocks == oracle::matroid_blocks(split.C().to_rows(), 4));
}

TEST_CASE("positive locus") {
    CHECK_FALSE(positive_locus_nonempty({Q({{1, 1}}), Z({{1, 0}, {0, 1}})}, GroupMode::Positive));
    CHECK(positive_locus_nonempty(fixtures::idh(), GroupMode::Positive));
    for (auto mode : {GroupMode::Positive, GroupMode::RealStar, GroupMode::ComplexStar})
        CHECK_FALSE(positive_locus_nonempty({Q({{1, 0}, {0, 1}}), Z({{1, 0}, {0, 1}})}, mode));
    CHECK_THROWS_AS(invariance_group({Q({{1, 1}}), Z({{1, 0}, {0, 1}})}, GroupMode::Positive), ToricityError);
}

TEST_CASE("invariance lattices of the worked examples") {
    auto idh = invariance_group(fixtures::idh(), GroupMode::Positive);
    CHECK(idh.d == 2);
    CHECK(same_row_lattice(idh.A, fixtures::idh_A()));

    auto fig = invariance_group(fixtures::fig_first(), GroupMode::Positive);
    CHECK(same_row_lattice(fig.A, Z({{10, 15, 2}})));

    auto inf = invariance_group(fixtures::infinitely_many(), GroupMode::Positive);
    CHECK(same_row_lattice(inf.A, Z({{1, 1, 1}})));

    CHECK(invariance_group(fixtures::fig_second(), GroupMode::Positive).d == 0);

    for (auto mode : {GroupMode::RealStar, GroupMode::ComplexStar})
        CHECK(same_row_lattice(invariance_group(fixtures::idh(), mode).A, fixtures::idh_A()));
}

TEST_CASE("invariance is exact on the polynomials") {
    // F(t^A ∘ x) = F(x) up to a per-block monomial factor: A (M_i - M_j) = 0 inside blocks.
    auto sys = fixtures::idh();
    auto inv = invariance_group(sys, GroupMode::Positive);
    auto M = to_rational(sys.M());
    for (const auto& block : inv.partition.blocks)
        for (std::size_t k = 1; k < block.size(); ++k)
            for (std::size_t r = 0; r < inv.A.rows(); ++r) {
                Rational dot = 0;
                for (std::size_t i = 0; i < sys.n(); ++i) dot += Rational(inv.A(r, i)) * (M(i, block[k]) - M(i, block[0]));
                CHECK(dot == 0);
            }
}

TEST_CASE("quasihomogeneity") {
    CHECK(same_row_lattice(quasihomogeneity_weights(fixtures::idh()), fixtures::idh_A()));
    CHECK(quasihomogeneity_weights(fixtures::fig_first()).rows() == 0);
    auto single = fixtures::infinitely_many();
    CHECK(same_row_lattice(quasihomogeneity_weights(single), invariance_group(single, GroupMode::Positive).A));
}

TEST_CASE("nondegeneracy") {
    CHECK(nondegeneracy(fixtures::idh(), 1).status == Nondegeneracy::Yes);
    CHECK(nondegeneracy({Q({{1, -1}}), Z({{1, 1}})}, 1).status == Nondegeneracy::No);
    CHECK(nondegeneracy(fixtures::infinitely_many(), 1).status == Nondegeneracy::Yes);

    auto nd = nondegeneracy(fixtures::idh(), 5);
    REQUIRE(nd.status == Nondegeneracy::Yes);
    auto r = multiply(fixtures::idh_C(), nd.witness);
    CHECK(std::all_of(r.begin(), r.end(), [](const Rational& x) { return x == 0; }));
}

TEST_CASE("nondegeneracy for all positive kernel vectors") {
    auto idh = nondegeneracy_all_positive(fixtures::idh());
    CHECK(idh.status == AllPositive::Yes);
    CHECK(idh.columns.size() == 3);
    CHECK(sign_classify(idh.minor) != SignVerdict::MixedSigns);
    CHECK(nondegeneracy_all_positive(fixtures::triangle()).status == AllPositive::Yes);
    CHECK(nondegeneracy_all_positive({Q({{1, -1}}), Z({{1, 0}, {0, 1}})}).status == AllPositive::Yes);
}

TEST_CASE("local toricity") {
    auto inf = fixtures::infinitely_many();
    auto inf_inv = invariance_group(inf, GroupMode::Positive);
    CHECK(local_toricity(inf, inf_inv, Nondegeneracy::Yes) == LocalToricity::NotLocallyToric);

    auto idh = fixtures::idh();
    auto idh_inv = invariance_group(idh, GroupMode::Positive);
    CHECK(local_toricity(idh, idh_inv, Nondegeneracy::Yes, AllPositive::Yes) == LocalToricity::LocallyToric);
    CHECK(local_toricity(idh, idh_inv, Nondegeneracy::Yes) == LocalToricity::GenericallyLocallyToric);

    // k1 x1 - k2 x2 = k3 x2 - k4 = 0: square, nondegenerate, d = 0
    VerticalSystem sq(Q({{1, -1, 0, 0}, {0, 0, 1, -1}}), Z({{1, 0, 0, 0}, {0, 1, 1, 0}}));
    auto sq_inv = invariance_group(sq, GroupMode::Positive);
    CHECK(sq_inv.d == 0);
    CHECK(local_toricity(sq, sq_inv, Nondegeneracy::Yes) == LocalToricity::GenericallyLocallyToric);
}

TEST_CASE("injectivity test") {
    auto idh = fixtures::idh();
    auto res = injectivity_test(idh, invariance_group(idh, GroupMode::Positive));
    CHECK(res.outcome == InjectivityOutcome::Toric);
    REQUIRE(res.determinant);
    CHECK(equal_up_to_sign(*res.determinant, idh_expected_determinant(res.determinant->variables())));
    CHECK((res.sign == SignVerdict::AllNegative || res.sign == SignVerdict::AllPositive));

    auto sq = fixtures::square();
    auto sq_res = injectivity_test(sq, invariance_group(sq, GroupMode::Positive));
    CHECK(sq_res.outcome == InjectivityOutcome::Inconclusive);
    CHECK(sq_res.sign == SignVerdict::MixedSigns);
}

TEST_CASE("coset counting system") {
    auto tri = fixtures::triangle();
    auto inv = invariance_group(tri, GroupMode::Positive);
    auto h = coset_counting_system_at(tri, inv, fixtures::vec({"1", "1", "1", "1"}), fixtures::vec({"1", "1"}));
    CHECK(h.b == fixtures::vec({"5"}));
    auto lin = h.linear_equations();
    REQUIRE(lin.size() == 1);
    CHECK(lin[0].to_string() == "2*x1 + 3*x2 - 5");
    CHECK(count_positive_cosets(h).kind == CountKind::Exact);
    CHECK(count_positive_cosets(h).count == 1);

    // k1 x1 - k2 x2 = k3 x2 - k4 = 0 has d = 0 = n - s
    VerticalSystem sq(Q({{1, -1, 0, 0}, {0, 0, 1, -1}}), Z({{1, 0, 0, 0}, {0, 1, 1, 0}}));
    auto inv2 = invariance_group(sq, GroupMode::Positive);
    RationalVector kappa(sq.m(), Rational(1));
    auto h2 = coset_counting_system(sq, inv2, kappa, 3);
    CHECK(h2.b.empty());
    CHECK(h2.linear_equations().empty());

    auto text = exchange_format(h);
    CHECK(text.find("polynomials 1") != std::string::npos);
    CHECK(text.find("linear 1") != std::string::npos);
    CHECK(text.find("2*x1 + 3*x2 - 5") != std::string::npos);
}

TEST_CASE("square network coset counts") {
    auto sq = fixtures::square();
    auto inv = invariance_group(sq, GroupMode::Positive);
    REQUIRE(same_row_lattice(inv.A, Z({{2, 3}})));
    auto h = coset_counting_system_at(sq, inv, fixtures::vec({"1", "1", "1", "1"}), fixtures::vec({"1", "1"}));
    CHECK(h.b == fixtures::vec({"5"}));

    for (std::uint64_t seed : {1, 2, 3}) {
        auto three = count_positive_cosets(coset_counting_system(sq, inv, fixtures::vec({"0.01", "3", "1", "1"}), seed));
        CHECK(three.kind == CountKind::Exact);
        CHECK(three.count == 3);
        auto one = count_positive_cosets(coset_counting_system(sq, inv, fixtures::vec({"0.01", "1", "1", "1"}), seed));
        CHECK(one.kind == CountKind::Exact);
        CHECK(one.count == 1);
    }
}

TEST_CASE("constant coset conditions") {
    auto tri = fixtures::triangle();
    auto inv = invariance_group(tri, GroupMode::Positive);
    auto yes = constant_coset_conditions(tri, inv, Tri::Yes);
    CHECK(yes.boundary == Tri::Yes);
    CHECK(yes.nondegenerate == Tri::Yes);
    CHECK(yes.compact == Tri::Yes);
    CHECK(yes.all_yes());
    CHECK(constant_coset_conditions(tri, inv, Tri::Unknown).boundary == Tri::Unknown);

    // k1 x1 x2 - k2 is invariant under (t, 1/t): A = [1 -1], a non-compact slice.
    VerticalSystem hyper(Q({{1, -1}}), Z({{1, 0}, {1, 0}}));
    auto hinv = invariance_group(hyper, GroupMode::Positive);
    REQUIRE(same_row_lattice(hinv.A, Z({{1, -1}})));
    CHECK(constant_coset_conditions(hyper, hinv, Tri::Unknown).compact == Tri::No);
}

TEST_CASE("binomial quickcheck") {
    CHECK(binomial_quickcheck({Q({{1, -1, 0}, {0, 1, -1}}), Z({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})}));
    CHECK_FALSE(binomial_quickcheck(fixtures::idh()));
    CHECK_FALSE(binomial_quickcheck(fixtures::fig_first()));
}

TEST_CASE("freely parametrized systems") {
    auto tri = build_free_system({{{3, 2}, {0, 4}, {6, 0}}}, {{Rational(0), Rational(1), Rational(-2)}});
    CHECK(tri.C() == fixtures::triangle().C());
    CHECK(tri.M() == fixtures::triangle().M());

    auto one = build_free_system({{{2, 5}}});
    CHECK(one.C() == Q({{1}}));
    CHECK(one.M() == Z({{2}, {5}}));

    auto two = build_free_system({{{1, 0}, {0, 1}}, {{2, 0}}});
    CHECK(two.C() == Q({{1, 1, 0}, {0, 0, 1}}));
}

TEST_CASE("analyze on the worked examples") {
    auto idh = analyze(fixtures::idh(), GroupMode::Positive, 1);
    CHECK(idh.verdict == Verdict::Toric);
    REQUIRE(idh.invariance);
    CHECK(idh.invariance->d == 2);
    REQUIRE(idh.all_positive);
    CHECK(idh.all_positive->status == AllPositive::Yes);

    CHECK(analyze(fixtures::infinitely_many(), GroupMode::Positive, 1).verdict == Verdict::NotLocallyToric);

    auto fig2 = analyze(fixtures::fig_second(), GroupMode::Positive, 1);
    REQUIRE(fig2.invariance);
    CHECK(fig2.invariance->d == 0);
    CHECK(fig2.verdict == Verdict::NotLocallyToric);

    auto fig1 = analyze(fixtures::fig_first(), GroupMode::Positive, 1);
    REQUIRE(fig1.quasihomogeneity);
    CHECK(fig1.quasihomogeneity->rows() == 0);

    AnalyzeOptions opts;
    opts.boundary = Tri::Yes;
    opts.kappa = fixtures::vec({"1", "1", "1", "1"});
    auto tri = analyze(fixtures::triangle(), GroupMode::Positive, 1, opts);
    CHECK(tri.verdict == Verdict::Toric);
    CHECK(tri.all_kappa);
    REQUIRE(tri.mixed_volume);
    CHECK(*tri.mixed_volume == 6);

    auto empty = analyze({Q({{1, 1}}), Z({{1, 0}, {0, 1}})}, GroupMode::Positive, 1);
    CHECK(empty.verdict == Verdict::EmptyPositiveLocus);

    auto star = analyze(fixtures::idh(), GroupMode::ComplexStar, 1);
    CHECK(!star.notices.empty());
}

TEST_CASE("analysis is deterministic in the seed") {
    AnalyzeOptions opts;
    opts.boundary = Tri::Yes;
    auto a = analyze(fixtures::triangle(), GroupMode::Positive, 42, opts);
    auto b = analyze(fixtures::triangle(), GroupMode::Positive, 42, opts);
    CHECK(a.verdict == b.verdict);
    REQUIRE(a.count_kappa);
    CHECK(*a.count_kappa == *b.count_kappa);
}
