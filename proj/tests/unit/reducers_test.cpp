#include "doctest.h"
#include "roughset/errors.hpp"
#include "roughset/reducers.hpp"
#include "support/fixtures.hpp"

using namespace roughset;
using namespace roughset::testing;

TEST_CASE("select_attribute") {
  std::vector<AttrSet> rest{{1, 2}, {2, 3}, {1, 2, 3}};
  CHECK(select_attribute(AttrSet{1, 2, 3}, rest, SelectionPolicy::First) == 1);
  CHECK(select_attribute(AttrSet{1, 2, 3}, rest, SelectionPolicy::MaxFrequency) == 2);
  // 1 and 3 tie at two occurrences each
  CHECK(select_attribute(AttrSet{1, 3}, rest, SelectionPolicy::MaxFrequency) == 1);
  CHECK_THROWS_AS(select_attribute(AttrSet{}, rest, SelectionPolicy::First), InvariantViolation);
  CHECK(to_string(SelectionPolicy::First) == "first");
  CHECK(to_string(SelectionPolicy::MaxFrequency) == "freq");
}

TEST_CASE("exhaustive reducts") {
  auto f = family_of(example_4_1());
  CHECK(all_reducts_bruteforce(f) == std::vector<AttrSet>{{0, 1}, {0, 2}, {1, 2}});
  CHECK(all_reducts_bruteforce(example_5_1_family()) == std::vector<AttrSet>{{0, 2}, {1, 2}});
  CHECK(all_reducts_bruteforce(SetFamily(4)) == std::vector<AttrSet>{AttrSet{}});
  CHECK(all_reducts_bruteforce(f, AttrSet::range(4), 4).size() == 3);
  CHECK_THROWS_AS(all_reducts_bruteforce(f, AttrSet::range(4), 3), ResourceError);
}

TEST_CASE("E(a) reduction on the six-attribute family, first selection") {
  auto nf = example_6_1();
  auto A = [&](std::vector<std::string> n) { return attrs(nf, n); };
  const auto& f = nf.family;
  auto res = ea_reduce(f, SelectionPolicy::First);
  REQUIRE(res.trace.iterations.size() == 2);

  const auto& first = res.trace.iterations[0];
  CHECK(nf.names[first.chosen] == "a");
  CHECK(first.n == fam(6, {A({"a", "c"}), A({"a", "d"}), A({"a", "b", "f"})}));
  CHECK(first.e == fam(6, {A({"b", "c"}), A({"b", "d"}), A({"c", "d", "f"})}));
  CHECK(first.red == A({"b", "c"}));
  CHECK(first.a_added);
  REQUIRE(first.missed_by_red.has_value());
  CHECK(*first.missed_by_red == A({"a", "d"}));
  CHECK(first.family_after == fam(6, {A({"e"})}));

  const auto& second = res.trace.iterations[1];
  CHECK(nf.names[second.chosen] == "e");
  CHECK(second.family_after.empty());

  CHECK(res.reduct == A({"a", "b", "c", "e"}));
  CHECK(res.trace.unminimized == res.reduct);
  CHECK(res.trace.removed.empty());
  CHECK(verify_reduct(f, res.reduct).valid());
  CHECK_FALSE(replay_ea_trace(f, res.trace, SelectionPolicy::First).has_value());
}

TEST_CASE("RED of E(a) under frequency selection") {
  auto nf = example_6_1();
  auto e = e_of(nf.family, 0);
  CHECK(red_of_family(e, SelectionPolicy::MaxFrequency) == attrs(nf, {"b", "c"}));
  CHECK(red_of_family(e, SelectionPolicy::First) == attrs(nf, {"b", "c"}));
}

TEST_CASE("replay catches a tampered trace") {
  auto nf = example_6_1();
  auto res = ea_reduce(nf.family, SelectionPolicy::First);
  auto bad = res.trace;
  bad.iterations[0].red = attrs(nf, {"b", "d"});
  CHECK(replay_ea_trace(nf.family, bad, SelectionPolicy::First).has_value());
  auto wrong_policy = replay_ea_trace(nf.family, res.trace, SelectionPolicy::MaxFrequency);
  auto freq = ea_reduce(nf.family, SelectionPolicy::MaxFrequency);
  if (freq.trace.iterations[0].chosen != res.trace.iterations[0].chosen) CHECK(wrong_policy.has_value());
}

TEST_CASE("row-wise simplification") {
  auto f = family_of(example_4_1());
  for (auto p : {SelectionPolicy::First, SelectionPolicy::MaxFrequency}) {
    auto res = yao_row_wise(f, p);
    CHECK(verify_reduct(f, res.reduct).valid());
    CHECK(res.trace.initial.size() == f.size());
    for (const auto& e : res.trace.steps.back().entries_after) CHECK(e.size() == 1);
  }
  CHECK(yao_row_wise(SetFamily(3), SelectionPolicy::First).reduct.empty());
}

TEST_CASE("empty family reduces to the empty set") {
  auto res = ea_reduce(SetFamily(3), SelectionPolicy::First);
  CHECK(res.reduct.empty());
  CHECK(res.trace.iterations.empty());
}

TEST_CASE("verify_reduct diagnoses") {
  auto f = family_of(example_4_1());
  CHECK(verify_reduct(f, AttrSet{0, 1}).valid());
  auto miss = verify_reduct(f, AttrSet{0});
  CHECK(miss.kind == ReductDiagnosis::Kind::NotHitting);
  CHECK(*miss.missed == AttrSet{1, 2});
  auto extra = verify_reduct(f, AttrSet{0, 1, 2});
  CHECK(extra.kind == ReductDiagnosis::Kind::NotMinimal);
  CHECK(*extra.removable == 2);
  CHECK(verify_reduct(SetFamily(2), AttrSet{}).valid());
  CHECK(verify_reduct(SetFamily(2), AttrSet{0}).kind == ReductDiagnosis::Kind::NotMinimal);
}

TEST_CASE("minimize flag") {
  SetFamily f(3, {{0, 1}, {1}});
  auto res = ea_reduce(f, SelectionPolicy::First);
  CHECK(res.reduct == AttrSet{1});
  CHECK(verify_reduct(f, res.reduct).valid());
  auto raw = ea_reduce(f, SelectionPolicy::First, false);
  CHECK_FALSE(raw.trace.minimized);
  CHECK(raw.reduct == raw.trace.unminimized);
}

TEST_CASE("small fixed cases") {
  CHECK(yao_row_wise(SetFamily(2, {{0, 1}}), SelectionPolicy::First).reduct == AttrSet{0});
  CHECK(ea_reduce(SetFamily(1, {{0}}), SelectionPolicy::First).reduct == AttrSet{0});
  CHECK(ea_reduce(SetFamily(1, {{0}}), SelectionPolicy::MaxFrequency, false).reduct == AttrSet{0});
  auto f = family_of(example_4_1());
  CHECK(red_of_family(e_of(f, 0), SelectionPolicy::First) == AttrSet{1});
  CHECK(red_of_family(SetFamily(3), SelectionPolicy::First).empty());
  auto ex61 = example_6_1();
  CHECK(verify_reduct(ex61.family, yao_row_wise(ex61.family, SelectionPolicy::MaxFrequency).reduct).valid());
}
