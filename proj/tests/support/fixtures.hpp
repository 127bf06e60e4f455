#pragma once

#include <string>
#include <vector>

#include "roughset/discernibility.hpp"
#include "roughset/information_system.hpp"
#include "roughset/set_family.hpp"
#include "support/oracle.hpp"

namespace roughset::testing {

/// Five objects, four attributes, given by their single-attribute partitions.
inline InformationSystem example_4_1() {
  return InformationSystem::from_partitions({"a1", "a2", "a3", "a4"}, 5,
                                            {
                                                {{0, 1}, {2, 3}, {4}},
                                                {{0, 1, 2}, {3, 4}},
                                                {{0, 1, 3}, {2, 4}},
                                                {{0, 1, 2, 3}, {4}},
                                            });
}

/// The three single-attribute partitions as printed for the coupled/excludes
/// example. Their matrix differs from the printed table at (1,3) and (1,5).
inline InformationSystem example_5_1_partitions() {
  return InformationSystem::from_partitions({"a1", "a2", "a3"}, 5,
                                            {
                                                {{0, 1, 2}, {3, 4}},
                                                {{0, 1}, {2, 3, 4}},
                                                {{0, 2}, {1, 3, 4}},
                                            });
}

/// The printed 5x5 table, entered verbatim, packed row-major above the diagonal.
inline DiscernibilityMatrix example_5_1_printed_matrix() {
  const AttrSet a1{0}, a2{1}, a3{2};
  return DiscernibilityMatrix(5, 3,
                              {
                                  a3, a2 | a3, a1 | a2 | a3, a2 | a3,  // row 1
                                  a2 | a3, a1 | a2, a1 | a2,           // row 2
                                  a1 | a3, a1 | a3,                    // row 3
                                  AttrSet{},                           // row 4
                              });
}

inline SetFamily example_5_1_family() { return family(example_5_1_printed_matrix()); }

/// Four objects whose distinct discernibility sets are exactly the printed
/// table's.
inline InformationSystem example_5_1_realization() {
  return InformationSystem({"a1", "a2", "a3"}, {{"0", "0", "0"}, {"0", "0", "1"}, {"1", "1", "0"}, {"1", "0", "2"}});
}

inline const std::vector<std::string>& example_5_1_names() {
  static const std::vector<std::string> names{"a1", "a2", "a3"};
  return names;
}

inline const char* example_6_1_json() {
  return R"([["a","b","f"],["a","c"],["a","d"],["c","d","f"],["b","d"],["b","c"],["b","e","f"],["c","e"],["d","e"]])";
}

inline NamedFamily example_6_1() { return load_family_json(example_6_1_json()); }

inline SetFamily family_of(const InformationSystem& is) { return family(discernibility_matrix(is)); }

/// Builds an AttrSet from names of `is`.
inline AttrSet attrs(const InformationSystem& is, const std::vector<std::string>& names) {
  return attr_set_from_names(is.attribute_names(), names);
}

inline AttrSet attrs(const NamedFamily& nf, const std::vector<std::string>& names) {
  return attr_set_from_names(nf.names, names);
}

inline oracle::Names to_names(const AttrSet& s) {
  auto m = s.members();
  return oracle::Names(m.begin(), m.end());
}

inline std::vector<oracle::Names> to_names(const std::vector<AttrSet>& sets) {
  std::vector<oracle::Names> out;
  for (const auto& s : sets) out.push_back(to_names(s));
  return out;
}

inline SetFamily fam(std::size_t universe, const std::vector<AttrSet>& sets) { return SetFamily(universe, sets); }

}  // namespace roughset::testing
