#include "doctest.h"
#include "roughset/errors.hpp"
#include "roughset/information_system.hpp"
#include "roughset/partition.hpp"

using namespace roughset;

TEST_CASE("values are interned per column") {
  InformationSystem is({"x", "y"}, {{"red", "1"}, {"blue", "1"}, {"red", "2"}});
  CHECK(is.object_count() == 3);
  CHECK(is.attribute_count() == 2);
  CHECK(is.code(0, 0) == is.code(2, 0));
  CHECK(is.code(0, 0) != is.code(1, 0));
  CHECK(is.code(0, 1) == is.code(1, 1));
  CHECK(is.value(1, 0) == "blue");
  CHECK(is.object_label(0) == "1");
  CHECK(is.object_label(2) == "3");
  CHECK(*is.find_attribute("y") == 1);
  CHECK_FALSE(is.find_attribute("z").has_value());
  CHECK(is.all_attributes() == AttrSet{0, 1});
}

TEST_CASE("construction rejects malformed tables") {
  CHECK_THROWS_AS(InformationSystem({}, {{}}), InputError);
  CHECK_THROWS_AS(InformationSystem({"a", "a"}, {{"1", "2"}}), InputError);
  CHECK_THROWS_AS(InformationSystem({"a"}, {}), InputError);
  CHECK_THROWS_AS(InformationSystem({"a", "b"}, {{"1"}}), InputError);
  CHECK_THROWS_AS(InformationSystem({"a"}, {{"1"}, {"2"}}, {"only-one"}), InputError);
}

TEST_CASE("check_attributes") {
  InformationSystem is({"a", "b"}, {{"1", "2"}});
  CHECK_NOTHROW(is.check_attributes(AttrSet{0, 1}));
  CHECK_THROWS_AS(is.check_attributes(AttrSet{2}), InputError);
}

TEST_CASE("from_partitions reproduces the partitions") {
  auto is = InformationSystem::from_partitions({"p", "q"}, 4, {{{0, 3}, {1, 2}}, {{0}, {1}, {2, 3}}});
  CHECK(indiscernibility_partition(is, AttrSet{0}) == Partition(4, {ObjSet{0, 3}, ObjSet{1, 2}}));
  CHECK(indiscernibility_partition(is, AttrSet{1}) == Partition(4, {ObjSet{0}, ObjSet{1}, ObjSet{2, 3}}));
  CHECK_THROWS_AS(InformationSystem::from_partitions({"p"}, 3, {{{0, 1}}}), InputError);
  CHECK_THROWS_AS(InformationSystem::from_partitions({"p"}, 2, {{{0, 1}, {1}}}), InputError);
}

TEST_CASE("parse_csv handles quoting and blank lines") {
  auto recs = parse_csv("a,b\n\n\"x,1\",\"say \"\"hi\"\"\"\r\n,\n");
  REQUIRE(recs.size() == 3);
  CHECK(recs[0].line == 1);
  CHECK(recs[1].line == 3);
  CHECK(recs[1].fields == std::vector<std::string>{"x,1", "say \"hi\""});
  CHECK(recs[2].fields == std::vector<std::string>{"", ""});
}

TEST_CASE("parse_csv keeps a quoted newline inside one record") {
  auto recs = parse_csv("a\n\"two\nlines\"\nz\n");
  REQUIRE(recs.size() == 3);
  CHECK(recs[1].fields[0] == "two\nlines");
  CHECK(recs[2].line == 4);
}

TEST_CASE("parse_csv errors name the position") {
  try {
    parse_csv("a,b\nx\"y,z\n", "t.csv");
    FAIL("expected an error");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("t.csv:2:") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_csv("a\n\"open\n"), InputError);
  CHECK_THROWS_AS(parse_csv("\"a\"x,b\n"), InputError);
  CHECK(parse_csv("\"a\",b\r\n").front().fields == std::vector<std::string>{"a", "b"});
}

TEST_CASE("load_table") {
  auto is = load_table("a,b\n1,2\n1,3\n");
  CHECK(is.attribute_names() == std::vector<std::string>{"a", "b"});
  CHECK(is.object_count() == 2);

  TableOptions id;
  id.id_column = true;
  auto labelled = load_table("obj,a\nfirst,1\nsecond,2\n", id);
  CHECK(labelled.attribute_names() == std::vector<std::string>{"a"});
  CHECK(labelled.object_label(1) == "second");
}

TEST_CASE("load_table rejects bad input with row and column") {
  TableOptions opt;
  opt.source = "in.csv";
  auto message = [&](const char* text) {
    try {
      load_table(text, opt);
    } catch (const InputError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message("") .find("in.csv") != std::string::npos);
  CHECK(message("a,b\n") .find("in.csv") != std::string::npos);
  CHECK(message("a,a\n1,2\n").find("in.csv:1:2") != std::string::npos);
  CHECK(message("a,b\n1,2\n3\n").find("in.csv:3") != std::string::npos);
  CHECK(message("a,b\n1,2,3\n").find("in.csv:2") != std::string::npos);
  TableOptions idopt = opt;
  idopt.id_column = true;
  CHECK_THROWS_AS(load_table("id\nx\n", idopt), InputError);
}

TEST_CASE("values are opaque tokens") {
  auto is = load_table("a\n01\n1\n 1\n");
  CHECK(is.code(0, 0) != is.code(1, 0));
  CHECK(is.code(1, 0) != is.code(2, 0));
}
