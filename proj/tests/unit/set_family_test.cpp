#include "doctest.h"
#include "roughset/errors.hpp"
#include "roughset/set_family.hpp"

using namespace roughset;

TEST_CASE("family drops empties and duplicates, sorts canonically") {
  SetFamily f(4, {{2, 3}, {}, {1}, {2, 3}, {0, 1, 2}, {0}});
  REQUIRE(f.size() == 4);
  CHECK(f[0] == AttrSet{0});
  CHECK(f[1] == AttrSet{1});
  CHECK(f[2] == AttrSet{2, 3});
  CHECK(f[3] == AttrSet{0, 1, 2});
  CHECK(f.contains(AttrSet{2, 3}));
  CHECK_FALSE(f.contains(AttrSet{2}));
  CHECK(f.union_all() == AttrSet{0, 1, 2, 3});
  CHECK(f.universe_size() == 4);
}

TEST_CASE("family rejects members outside the universe") {
  CHECK_THROWS_AS(SetFamily(2, {{0, 2}}), InputError);
}

TEST_CASE("filter and difference keep the universe") {
  SetFamily f(3, {{0}, {1, 2}, {0, 2}});
  auto g = f.filter([](const AttrSet& s) { return s.contains(2); });
  CHECK(g == SetFamily(3, {{1, 2}, {0, 2}}));
  CHECK(family_difference(f, g) == SetFamily(3, {{0}}));
  CHECK(SetFamily(3).empty());
  CHECK(SetFamily(3).union_all().empty());
}

TEST_CASE("family JSON: names sorted, members looked up") {
  auto nf = load_family_json(R"([["b","a"],["c"],[]])");
  CHECK(nf.names == std::vector<std::string>{"a", "b", "c"});
  CHECK(nf.family == SetFamily(3, {{0, 1}, {2}}));
  CHECK(load_family_json("[]").names.empty());
}

TEST_CASE("family JSON errors") {
  CHECK_THROWS_AS(load_family_json("{"), InputError);
  CHECK_THROWS_AS(load_family_json(R"({"a":1})"), InputError);
  CHECK_THROWS_AS(load_family_json(R"(["a"])"), InputError);
  CHECK_THROWS_AS(load_family_json(R"([["a", 1]])"), InputError);
  CHECK_THROWS_AS(load_family_json(""), InputError);
}

TEST_CASE("formatting sorts by name") {
  const std::vector<std::string> names{"z", "a", "m"};
  CHECK(format_set(AttrSet{0, 1, 2}, names) == "{a, m, z}");
  CHECK(format_set(AttrSet{}, names) == "{}");
  CHECK(format_family(SetFamily(3, {{0}, {1, 2}}), names) == "{{z}, {a, m}}");
  CHECK(sorted_names(AttrSet{0, 1}, names) == std::vector<std::string>{"a", "z"});
  CHECK(attr_set_from_names(names, {"m", "z"}) == AttrSet{0, 2});
  CHECK_THROWS_AS(attr_set_from_names(names, {"q"}), InputError);
}
