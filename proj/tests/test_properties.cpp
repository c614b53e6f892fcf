#include <doctest.h>

#include "property_checks.hpp"

namespace {

void require(const testing::PropertyOutcome& p) {
  INFO(p.name << ": " << p.failures << " of " << p.cases << " failed; first: " << p.first_failure);
  CHECK(p.ok());
}

}  // namespace

TEST_CASE("property: closeness bounds") { require(testing::closeness_bounds(500, 101)); }
TEST_CASE("property: column-scale invariance") { require(testing::scale_invariance(500, 102)); }
TEST_CASE("property: weight extremes") { require(testing::weight_extremes(500, 103)); }
TEST_CASE("property: stage-2 oracle") { require(testing::stage2_oracle(1000, 104)); }
TEST_CASE("property: Hellinger quadrature") { require(testing::hellinger_quadrature(200, 105)); }
TEST_CASE("property: Wilcoxon enumeration") { require(testing::wilcoxon_enumeration(200, 106)); }
