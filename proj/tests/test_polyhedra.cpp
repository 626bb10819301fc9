#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "oracles.hpp"

#include "toricity/lp.hpp"
#include "toricity/polyhedra.hpp"

using namespace toricity;
using fixtures::Q;
using fixtures::Z;

namespace {

/// Whether v is a nonnegative combination of the rays, decided by LP.
bool in_cone(const ConeRays& cone, const IntegerVector& v) {
    RationalMatrix r(cone.ambient_dim, cone.rays.size());
    for (std::size_t k = 0; k < cone.rays.size(); ++k)
        for (std::size_t i = 0; i < cone.ambient_dim; ++i) r(i, k) = cone.rays[k][i];
    RationalVector b(v.begin(), v.end());
    RationalVector c(cone.rays.size(), Rational(0));
    return solve_lp(r, b, c).status == LpStatus::Optimal;
}

SupportSet pts(std::initializer_list<std::initializer_list<std::int64_t>> ps) {
    std::vector<LatticePoint> out;
    for (const auto& p : ps) out.emplace_back(p);
    return SupportSet(out);
}

}  // namespace

TEST_CASE("strictly positive kernel vectors") {
    auto w = strictly_positive_kernel(Q({{1, -1}}));
    REQUIRE(w);
    CHECK(*w == IntegerVector{1, 1});
    CHECK_FALSE(strictly_positive_kernel(Q({{1, 1}})));

    auto idh = strictly_positive_kernel(fixtures::idh_C());
    REQUIRE(idh);
    CHECK(std::all_of(idh->begin(), idh->end(), [](const Integer& x) { return x > 0; }));
    RationalVector wr(idh->begin(), idh->end());
    auto r = multiply(fixtures::idh_C(), wr);
    CHECK(std::all_of(r.begin(), r.end(), [](const Rational& x) { return x == 0; }));
    // The hand-computed witness (2,1,1,2,1,1) also lies in the kernel.
    auto given = multiply(fixtures::idh_C(), fixtures::vec({"2", "1", "1", "2", "1", "1"}));
    CHECK(std::all_of(given.begin(), given.end(), [](const Rational& x) { return x == 0; }));
}

TEST_CASE("extreme rays") {
    auto line = extreme_rays(Q({{1, -1}}));
    CHECK(line.rays == std::vector<IntegerVector>{{1, 1}});

    auto idh = extreme_rays(fixtures::idh_C());
    CHECK(in_cone(idh, {1, 0, 1, 1, 0, 1}));
    CHECK(in_cone(idh, {0, 0, 0, 1, 1, 0}));
    CHECK(in_cone(idh, {1, 1, 0, 0, 0, 0}));
    for (const auto& ray : idh.rays) {
        RationalVector v(ray.begin(), ray.end());
        auto r = multiply(fixtures::idh_C(), v);
        CHECK(std::all_of(r.begin(), r.end(), [](const Rational& x) { return x == 0; }));
    }

    auto tri = extreme_rays(fixtures::triangle().C());
    std::set<IntegerVector> got(tri.rays.begin(), tri.rays.end());
    std::set<IntegerVector> want{{2, 0, 0, 1}, {1, 1, 0, 0}, {0, 0, 2, 1}, {0, 1, 1, 0}};
    CHECK(got == want);
}

TEST_CASE("positive row space") {
    CHECK(positive_row_space(Z({{2, 3}})));
    CHECK_FALSE(positive_row_space(Z({{1, -1}})));
    // Column 4 of the IDH lattice is zero, so no row combination is strictly positive.
    CHECK_FALSE(positive_row_space(fixtures::idh_A()));
}

TEST_CASE("polytope volume") {
    CHECK(polytope_volume(pts({{0, 0}, {1, 0}, {0, 1}, {1, 1}})) == 1);
    CHECK(polytope_volume(pts({{0}, {7}})) == 7);
    std::vector<oracle::Point2> quad{{0, 0}, {6, 0}, {3, 2}, {0, 4}};
    auto v = polytope_volume(pts({{0, 0}, {6, 0}, {3, 2}, {0, 4}}));
    CHECK(v > 0);
    CHECK(v == oracle::hull_area(quad));
    CHECK(polytope_volume(pts({{0, 0}, {1, 1}, {2, 2}})) == 0);
}

TEST_CASE("convex hull vertices and Minkowski sums") {
    auto hull = convex_hull_vertices(pts({{0, 0}, {2, 0}, {1, 1}, {0, 2}, {1, 0}}));
    CHECK(hull.points.size() == 3);
    auto sum = minkowski_sum(pts({{0, 0}, {1, 0}}), pts({{0, 0}, {0, 1}}));
    CHECK(polytope_volume(sum) == 1);
}

TEST_CASE("mixed volume") {
    std::vector<SupportSet> simplices{pts({{0, 0}, {1, 0}, {0, 1}}), pts({{0, 0}, {1, 0}, {0, 1}})};
    CHECK(mixed_volume(simplices) == 1);

    std::vector<SupportSet> uni{pts({{0}, {1}, {2}, {3}, {4}, {5}})};
    CHECK(mixed_volume(uni) == 5);

    auto tri = fixtures::triangle();
    auto supports = coset_supports(tri, Z({{2, 3}}));
    CHECK(mixed_volume(supports) == 6);

    std::vector<SupportSet> wrong{pts({{0, 0}, {1, 0}})};
    CHECK_THROWS_AS(mixed_volume(wrong), ToricityError);
}
