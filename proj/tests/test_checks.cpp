#include "fcoh/checks.hpp"

#include <doctest.h>

using namespace fcoh;

TEST_CASE("composition laws hold as matrix identities") {
  CompositionCheckParams p;
  p.pairs = 50;
  const CompositionCheck hw = composition_check(GroupKind::HW, p);
  CHECK(hw.max_residual <= 1e-9);
  CHECK(hw.interior == 20);
  const CompositionCheck su2 = composition_check(GroupKind::SU2, p);
  CHECK(su2.max_residual <= 1e-10);
  CHECK(su2.pairs == 50 * 6);
  p.pairs = 10;
  const CompositionCheck su11 = composition_check(GroupKind::SU11, p);
  CHECK(su11.max_residual <= 1e-8);
  CHECK(su11.interior == 72);
  REQUIRE(su11.unconjugated_residual.has_value());
  CHECK(*su11.unconjugated_residual > 1e-2);
}

TEST_CASE("composition checks are seeded") {
  CompositionCheckParams p;
  p.pairs = 5;
  CHECK(composition_check(GroupKind::HW, p).max_residual == composition_check(GroupKind::HW, p).max_residual);
  CHECK_THROWS_AS(composition_check(GroupKind::HW, CompositionCheckParams{0}), std::invalid_argument);
  CompositionCheckParams bad;
  bad.hw_interior = 100;
  CHECK_THROWS_AS(composition_check(GroupKind::HW, bad), std::invalid_argument);
}

TEST_CASE("invariant measures") {
  for (GroupKind g : {GroupKind::HW, GroupKind::SU2, GroupKind::SU11}) {
    const MeasureCheck m = measure_invariance_check(g, 100, 7);
    CHECK(m.pairs == 100);
    CHECK(m.max_relative_residual <= 1e-10);
  }
  CHECK_THROWS_AS(measure_invariance_check(GroupKind::SU2, 0), std::invalid_argument);
}

TEST_CASE("group kind names") {
  CHECK(parse_group_kind("su11") == GroupKind::SU11);
  CHECK(to_string(GroupKind::SU2) == "su2");
  CHECK_THROWS_AS(parse_group_kind("so3"), std::invalid_argument);
}
