#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "roughset/set_family.hpp"

namespace roughset {

enum class Character { Core, RelativeNecessary, Unnecessary };

/// "core", "relative_necessary", "unnecessary"
std::string_view to_string(Character c);

/// Every member of `coarse` contains some member of `fine`.
bool is_refinement(const SetFamily& fine, const SetFamily& coarse);

/// is_refinement(fine, coarse), and every member of `fine` lies inside some
/// member of `coarse`.
bool precise_refines(const SetFamily& fine, const SetFamily& coarse);

/// One member of E(a) under each member of N(a), when that is possible. The
/// result is a subfamily of E(a) that precise-refines N(a).
std::optional<SetFamily> precise_refinement_witness(const SetFamily& f, AttrId a);

/// Singleton rule, then membership in the union of the subset-minimal members.
Character classify(const SetFamily& f, AttrId a);

/// Singleton rule, then whether E(a) refines N(a).
Character classify_by_refinement(const SetFamily& f, AttrId a);

struct AttributeCharacter {
  AttrId attribute = 0;
  Character character = Character::Unnecessary;
  /// Core: the member {a}.
  std::optional<AttrSet> core_witness;
  /// Unnecessary: (K, M) with K in N(a), M in E(a), M inside K, for every K.
  std::vector<std::pair<AttrSet, AttrSet>> refinement_witnesses;
  /// RelativeNecessary: a member of N(a) that contains no member of E(a).
  std::optional<AttrSet> blocking;
};

struct CharacterReport {
  std::vector<AttributeCharacter> attributes;  // attribute-id order

  AttrSet with(Character c) const;
  Character of(AttrId a) const { return attributes.at(a).character; }
};

/// Classifies every attribute of the universe. Throws InvariantViolation if
/// the two rules disagree on any attribute.
CharacterReport classify_all(const SetFamily& f);

/// Re-checks the evidence stored in `entry` against `f`.
bool evidence_holds(const SetFamily& f, const AttributeCharacter& entry);

}  // namespace roughset
