#include <catch2/catch_amalgamated.hpp>

#include "support/property_suites.hpp"

// Each randomized suite runs at least 500 cases from a fixed seed and must
// report zero violations.

TEST_CASE("mediant bound and its equality characterization") {
  REQUIRE(testsupport::mediant_suite() == 0);
}

TEST_CASE("symmetrization never increases the constants") {
  REQUIRE(testsupport::symmetrization_suite() == 0);
}

TEST_CASE("doubling constant of a sum stays below the pairwise maximum") {
  REQUIRE(testsupport::cone_suite() == 0);
}

TEST_CASE("interior valley forces local constant at least three") {
  REQUIRE(testsupport::valley_suite() == 0);
}

TEST_CASE("sub-three symmetric measures grow strictly and sublinearly") {
  REQUIRE(testsupport::weight_bounds_suite() == 0);
}

TEST_CASE("peaked symmetric sequences admit a large neighbor quotient") {
  REQUIRE(testsupport::chain_bound_suite() == 0);
}

TEST_CASE("doubling constant decomposes into the three quotient families") {
  REQUIRE(testsupport::decomposition_suite() == 0);
}
