#include "doctest.h"
#include "roughset/characterization.hpp"
#include "roughset/discernibility.hpp"
#include "support/fixtures.hpp"

using namespace roughset;
using namespace roughset::testing;

TEST_CASE("refinement and precise refinement") {
  SetFamily fine(4, {{0}, {1, 2}});
  SetFamily coarse(4, {{0, 3}, {1, 2, 3}});
  CHECK(is_refinement(fine, coarse));
  CHECK(precise_refines(fine, coarse));
  CHECK_FALSE(is_refinement(coarse, fine));
  SetFamily stray(4, {{0}, {1, 2}, {3}});
  CHECK(is_refinement(stray, coarse));
  CHECK(precise_refines(stray, coarse));
  SetFamily wide(4, {{0}, {1, 2}, {0, 1}});
  CHECK(is_refinement(wide, coarse));
  CHECK_FALSE(precise_refines(wide, coarse));
  CHECK(is_refinement(SetFamily(4), SetFamily(4)));
  CHECK_FALSE(is_refinement(SetFamily(4), coarse));
}

TEST_CASE("four-attribute example: no core, a4 unnecessary") {
  auto is = example_4_1();
  auto f = family_of(is);
  auto report = classify_all(f);
  CHECK(report.of(0) == Character::RelativeNecessary);
  CHECK(report.of(1) == Character::RelativeNecessary);
  CHECK(report.of(2) == Character::RelativeNecessary);
  CHECK(report.of(3) == Character::Unnecessary);
  CHECK(report.with(Character::Core).empty());
  CHECK(report.with(Character::Unnecessary) == attrs(is, {"a4"}));
  for (const auto& entry : report.attributes) CHECK(evidence_holds(f, entry));

  auto w = precise_refinement_witness(f, 3);
  REQUIRE(w.has_value());
  CHECK(precise_refines(*w, n_of(f, 3)));
  CHECK_FALSE(precise_refinement_witness(f, 0).has_value());
}

TEST_CASE("printed three-attribute table: a3 core") {
  auto report = classify_all(example_5_1_family());
  CHECK(report.of(0) == Character::RelativeNecessary);
  CHECK(report.of(1) == Character::RelativeNecessary);
  CHECK(report.of(2) == Character::Core);
  REQUIRE(report.attributes[2].core_witness.has_value());
  CHECK(*report.attributes[2].core_witness == AttrSet{2});
  REQUIRE(report.attributes[0].blocking.has_value());
}

TEST_CASE("both rules agree on each attribute") {
  auto nf = example_6_1();
  for (AttrId a = 0; a < nf.names.size(); ++a) {
    CHECK(classify(nf.family, a) == classify_by_refinement(nf.family, a));
  }
}

TEST_CASE("constant attribute is unnecessary") {
  InformationSystem is({"k", "v"}, {{"same", "1"}, {"same", "2"}, {"same", "3"}});
  auto report = classify_all(family_of(is));
  CHECK(report.of(0) == Character::Unnecessary);
  CHECK(report.of(1) == Character::Core);
}

TEST_CASE("single object: every attribute unnecessary") {
  InformationSystem is({"a", "b"}, {{"x", "y"}});
  auto f = family_of(is);
  CHECK(f.empty());
  auto report = classify_all(f);
  CHECK(report.with(Character::Unnecessary) == AttrSet{0, 1});
}

TEST_CASE("evidence is rejected when tampered") {
  auto f = family_of(example_4_1());
  auto report = classify_all(f);
  auto entry = report.attributes[3];
  REQUIRE_FALSE(entry.refinement_witnesses.empty());
  entry.refinement_witnesses.front().second = AttrSet{0, 1, 2, 3};
  CHECK_FALSE(evidence_holds(f, entry));
}

TEST_CASE("character names") {
  CHECK(to_string(Character::Core) == "core");
  CHECK(to_string(Character::RelativeNecessary) == "relative_necessary");
  CHECK(to_string(Character::Unnecessary) == "unnecessary");
}
