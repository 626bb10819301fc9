#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"

#include "toricity/network.hpp"

#include <set>

using namespace toricity;
using fixtures::Q;
using fixtures::Z;

namespace {

std::set<std::string> reaction_lines(const ReactionNetwork& net) {
    std::set<std::string> out;
    std::string text = net.to_string();
    std::size_t start = 0;
    while (start < text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string::npos) end = text.size();
        if (end > start) out.insert(text.substr(start, end - start));
        start = end + 1;
    }
    return out;
}

IntegerMatrix sf_A() {
    return Z({{1, 1, 1, 0, 1, 1, 0, 1, 1}, {0, 0, 0, 1, -1, 0, 0, 0, 0}});
}

}  // namespace

TEST_CASE("parsing") {
    auto idh = parse_network(fixtures::idh_network);
    CHECK(idh.species.size() == 5);
    CHECK(idh.reactions.size() == 6);

    auto ab = parse_network("A -> B");
    CHECK(ab.species == std::vector<std::string>{"A", "B"});
    CHECK(ab.reactions.size() == 1);

    auto out = parse_network("2A -> 0");
    REQUIRE(out.reactions.size() == 1);
    const auto& target = out.complexes[out.reactions[0].target];
    CHECK(std::all_of(target.begin(), target.end(), [](long c) { return c == 0; }));
    CHECK(out.complexes[out.reactions[0].source] == Complex{2});

    auto ordered = parse_network("species: B, A\n# comment\nA -> B");
    CHECK(ordered.species == std::vector<std::string>{"B", "A"});

    try {
        parse_network("A -> B\nA -> -> B");
        FAIL("expected a parse error");
    } catch (const ToricityError& e) {
        CHECK(e.kind() == ErrorKind::Parse);
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_network("species: A\nA -> C"), ToricityError);
}

TEST_CASE("mass-action matrices") {
    auto ab = mass_action_matrices(parse_network("A -> B"));
    CHECK(ab.N == Z({{-1}, {1}}));
    CHECK(ab.M == Z({{1}, {0}}));

    auto idh = mass_action_matrices(parse_network(fixtures::idh_network));
    CHECK(idh.M == fixtures::idh_M());
    CHECK(row_basis(to_rational(idh.N)) == row_basis(fixtures::idh_C()));

    auto tri = mass_action_matrices(parse_network(fixtures::triangle_network));
    CHECK(tri.M == fixtures::triangle().M());
}

TEST_CASE("steady-state systems") {
    auto idh = steady_state_system(parse_network(fixtures::idh_network));
    CHECK(matroid_partition(idh).blocks == std::vector<std::vector<std::size_t>>{{0, 1, 2, 3, 4, 5}});
    CHECK(same_row_lattice(invariance_group(idh, GroupMode::Positive).A, fixtures::idh_A()));

    auto ab = steady_state_system(parse_network("A <=> B"));
    CHECK(ab.s() == 1);
    CHECK(binomial_quickcheck(ab));

    auto sf = steady_state_system(parse_network(fixtures::shinar_feinberg_network));
    CHECK(sf.n() == 9);
    CHECK(sf.m() == 14);

    CHECK_THROWS_AS(steady_state_system(parse_network("A -> A")), ToricityError);
}

TEST_CASE("conservation laws") {
    auto idh = mass_action_matrices(parse_network(fixtures::idh_network));
    auto L = conservation_laws(idh.N);
    CHECK(row_basis(L) == row_basis(Q({{1, 0, 1, 0, 1}, {-2, 1, -1, 1, 0}})));
    CHECK(conservation_laws(mass_action_matrices(parse_network("A -> B")).N) == Q({{1, 1}}));
    CHECK(conservation_laws(mass_action_matrices(parse_network("A -> 0; B -> 0")).N).rows() == 0);
}

TEST_CASE("intermediates") {
    auto idh = parse_network(fixtures::idh_network);
    auto choice = find_intermediates(idh);
    CHECK(choice.intermediates == std::vector<std::size_t>{4});
    REQUIRE(choice.inputs.size() == 1);
    CHECK(choice.inputs[0] == Complex{0, 0, 1, 1});

    auto sf = find_intermediates(parse_network(fixtures::shinar_feinberg_network));
    CHECK(sf.intermediates == std::vector<std::size_t>{5, 7, 8});

    CHECK(find_intermediates(parse_network("A + B -> 2C; 2C -> A + B")).intermediates.empty());
    CHECK_THROWS_AS(validate_intermediates(idh, {0}), ToricityError);
}

TEST_CASE("reduction by intermediates") {
    auto idh = parse_network(fixtures::idh_network);
    auto red = reduce_network(idh, find_intermediates(idh));
    CHECK(red.B == Z({{0}, {0}, {1}, {1}}));
    CHECK(red.surjective == Tri::Yes);
    CHECK(reaction_lines(red.network) ==
          std::set<std::string>{"X1 + X2 -> X3", "X3 -> X1 + X2", "X3 -> X1 + X4", "X3 + X4 -> X2 + X3"});

    auto sf = parse_network(fixtures::shinar_feinberg_network);
    auto sf_red = reduce_network(sf, find_intermediates(sf));
    CHECK(reaction_lines(sf_red.network) == std::set<std::string>{"X1 -> X2", "X2 -> X1", "X2 -> X3", "X3 -> X2",
                                                                   "X3 -> X4", "X4 + X5 -> X2 + X7",
                                                                   "X3 + X7 -> X3 + X5", "X1 + X7 -> X1 + X5"});

    auto same = reduce_network(idh, validate_intermediates(idh, {}));
    CHECK(reaction_lines(same.network) == reaction_lines(idh));
    CHECK(same.B.cols() == 0);
}

TEST_CASE("lifting invariance") {
    auto a = lift_invariance(Z({{1, 0, 1, 0}, {0, 1, 1, 0}}), Z({{0}, {0}, {1}, {1}}));
    CHECK(a == fixtures::idh_A());
    CHECK(lift_invariance(Z({{1, 2}}), Z({{0}, {0}})) == Z({{1, 2, 0}}));
    CHECK_THROWS_AS(lift_invariance(Z({{1, 2}}), Z({{0}, {0}, {0}})), ToricityError);

    auto sf = parse_network(fixtures::shinar_feinberg_network);
    auto red = reduce_network(sf, find_intermediates(sf));
    auto lifted = lift_to_species_order(Z({{1, 1, 1, 0, 1, 0}, {0, 0, 0, 1, -1, 0}}), red);
    CHECK(lifted == sf_A());
}

TEST_CASE("multistationarity") {
    auto idh = mass_action_matrices(parse_network(fixtures::idh_network));
    auto res = multistationarity_test(fixtures::idh_A(), conservation_laws(idh.N), true);
    CHECK(res.outcome == Multistationarity::Monostationary);
    REQUIRE(res.determinant);
    auto vars = res.determinant->variables();
    auto a = [&](std::size_t i) { return SparsePolynomial::variable(vars, "alpha" + std::to_string(i)); };
    auto expected = a(1) * a(3) * a(4) + a(1) * a(4) * a(5) + (a(2) * a(3) * a(4)).scale(2) + a(2) * a(4) * a(5) +
                    a(3) * a(4) * a(5);
    CHECK((*res.determinant == expected || *res.determinant == -expected));

    CHECK(multistationarity_test(fixtures::idh_A(), conservation_laws(idh.N), false).outcome ==
          Multistationarity::Inconclusive);
    CHECK(multistationarity_test(Z({{1, 1}}), RationalMatrix(0, 2), true).outcome == Multistationarity::Inconclusive);
}

TEST_CASE("absolute concentration robustness") {
    auto flags = acr_detect(fixtures::idh_A(), Verdict::Toric);
    REQUIRE(flags.size() == 5);
    for (std::size_t i = 0; i < 5; ++i) CHECK((flags[i] == AcrFlag::ACR) == (i == 3));
    CHECK(acr_detect(fixtures::idh_A(), Verdict::LocallyToric)[3] == AcrFlag::LocalACR);
    CHECK(acr_detect(fixtures::idh_A(), Verdict::InvariantOnly)[3] == AcrFlag::Undetermined);
    for (auto f : acr_detect(Z({{1, 2, 3}}), Verdict::Toric)) CHECK(f == AcrFlag::NoACR);
}

TEST_CASE("network structure") {
    auto idh = network_structure(parse_network(fixtures::idh_network));
    CHECK(idh.complexes == 6);
    CHECK(idh.linkage_classes == 2);
    CHECK(idh.rank == 3);
    CHECK(idh.deficiency == 1);

    auto ab = network_structure(parse_network("A <=> B"));
    CHECK(ab.complexes == 2);
    CHECK(ab.linkage_classes == 1);
    CHECK(ab.deficiency == 0);
    CHECK(ab.weakly_reversible);
    CHECK(ab.deficiency_zero_certificate);

    auto tri = network_structure(parse_network(fixtures::triangle_network));
    CHECK(tri.complexes == 3);
    CHECK(tri.linkage_classes == 1);
    CHECK(tri.rank == 1);
    CHECK(tri.deficiency == 1);
}

TEST_CASE("siphons") {
    CHECK(siphon_boundary_check(parse_network("A <=> B"), Z({{1, 1}})) == Tri::Yes);
    CHECK(siphon_boundary_check(parse_network(fixtures::triangle_network), Z({{2, 3}})) == Tri::Yes);
    CHECK(siphon_boundary_check(parse_network("A -> B; B -> 0"), Z({{0, 1}})) == Tri::Unknown);

    auto idh = minimal_siphons(parse_network(fixtures::idh_network));
    std::set<std::vector<std::size_t>> got(idh.begin(), idh.end());
    CHECK(got == std::set<std::vector<std::size_t>>{{0, 2, 4}, {1, 2, 4}});
    CHECK_THROWS_AS(minimal_siphons(parse_network(fixtures::shinar_feinberg_network), 1), ToricityError);
}

TEST_CASE("network analysis end to end") {
    NetworkOptions opts;
    opts.multistationarity = true;
    opts.acr = true;

    auto idh = analyze_network(parse_network(fixtures::idh_network), opts);
    CHECK(idh.verdict == Verdict::Toric);
    REQUIRE(idh.A);
    CHECK(same_row_lattice(*idh.A, fixtures::idh_A()));
    REQUIRE(idh.multistationarity);
    CHECK(idh.multistationarity->outcome == Multistationarity::Monostationary);
    CHECK(idh.acr[3] == AcrFlag::ACR);
    REQUIRE(idh.report.all_positive);
    CHECK(idh.report.all_positive->status == AllPositive::Yes);

    auto sf = analyze_network(parse_network(fixtures::shinar_feinberg_network), opts);
    REQUIRE(sf.reduced);
    CHECK(sf.reduced->choice.intermediates.size() == 3);
    REQUIRE(sf.report.injectivity);
    CHECK(sf.report.injectivity->outcome == InjectivityOutcome::Toric);
    REQUIRE(sf.A);
    CHECK(same_row_lattice(*sf.A, sf_A()));
    CHECK(sf.acr[6] == AcrFlag::ACR);

    NetworkOptions direct = opts;
    direct.reduce = false;
    auto sf_direct = analyze_network(parse_network(fixtures::shinar_feinberg_network), direct);
    CHECK_FALSE(sf_direct.reduced);
    REQUIRE(sf_direct.report.injectivity);
    CHECK(sf_direct.report.injectivity->outcome == InjectivityOutcome::Inconclusive);
    REQUIRE(sf_direct.A);
    CHECK(same_row_lattice(*sf_direct.A, sf_A()));

    auto st = analyze_network(parse_network(fixtures::straube_network), opts);
    CHECK(st.verdict == Verdict::Toric);
    REQUIRE(st.report.injectivity);
    CHECK(st.report.injectivity->outcome == InjectivityOutcome::Toric);
    REQUIRE(st.multistationarity);
    CHECK(st.multistationarity->outcome == Multistationarity::Multistationary);
    for (auto f : st.acr) CHECK(f != AcrFlag::ACR);
    REQUIRE(st.reduced);
    CHECK(st.reduced->surjective == Tri::Unknown);
}
