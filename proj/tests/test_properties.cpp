#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "property_suites.hpp"

namespace {

void expect(const properties::SuiteResult& r) {
    INFO(r.name << ": " << r.failures << " of " << r.cases << " failed; first: " << r.first_failure);
    CHECK(r.cases > 0);
    CHECK(r.failures == 0);
}

}  // namespace

TEST_CASE("matroid partition agrees with circuit enumeration") { expect(properties::matroid_partition_suite()); }
TEST_CASE("invariance lattice annihilates block differences") { expect(properties::invariance_suite()); }
TEST_CASE("planar mixed volumes satisfy the two-polytope identity") { expect(properties::mixed_volume_suite()); }
TEST_CASE("Sturm counts match sign changes") { expect(properties::sturm_suite()); }
TEST_CASE("symbolic determinants evaluate correctly") { expect(properties::determinant_suite()); }
