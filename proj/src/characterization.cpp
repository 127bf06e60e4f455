#include "roughset/characterization.hpp"

#include <algorithm>

#include "roughset/discernibility.hpp"
#include "roughset/errors.hpp"

namespace roughset {

std::string_view to_string(Character c) {
  switch (c) {
    case Character::Core:
      return "core";
    case Character::RelativeNecessary:
      return "relative_necessary";
    case Character::Unnecessary:
      return "unnecessary";
  }
  return "?";
}

namespace {

const AttrSet* first_inside(const SetFamily& fine, const AttrSet& k) {
  for (const auto& m : fine) {
    if (m.is_subset_of(k)) return &m;
  }
  return nullptr;
}

}  // namespace

bool is_refinement(const SetFamily& fine, const SetFamily& coarse) {
  return std::all_of(coarse.begin(), coarse.end(), [&](const AttrSet& k) { return first_inside(fine, k) != nullptr; });
}

bool precise_refines(const SetFamily& fine, const SetFamily& coarse) {
  const bool each_fine_inside = std::all_of(fine.begin(), fine.end(), [&](const AttrSet& m) {
    return std::any_of(coarse.begin(), coarse.end(), [&](const AttrSet& k) { return m.is_subset_of(k); });
  });
  return each_fine_inside && is_refinement(fine, coarse);
}

std::optional<SetFamily> precise_refinement_witness(const SetFamily& f, AttrId a) {
  const auto n = n_of(f, a);
  const auto e = e_of(f, a);
  std::vector<AttrSet> chosen;
  for (const auto& k : n) {
    const auto* m = first_inside(e, k);
    if (m == nullptr) return std::nullopt;
    chosen.push_back(*m);
  }
  return SetFamily(f.universe_size(), std::move(chosen));
}

Character classify(const SetFamily& f, AttrId a) {
  if (f.contains(AttrSet{a})) return Character::Core;
  return absorb(f).d_reduct.union_all().contains(a) ? Character::RelativeNecessary : Character::Unnecessary;
}

Character classify_by_refinement(const SetFamily& f, AttrId a) {
  if (f.contains(AttrSet{a})) return Character::Core;
  return is_refinement(e_of(f, a), n_of(f, a)) ? Character::Unnecessary : Character::RelativeNecessary;
}

AttrSet CharacterReport::with(Character c) const {
  AttrSet out;
  for (const auto& entry : attributes) {
    if (entry.character == c) out.insert(entry.attribute);
  }
  return out;
}

CharacterReport classify_all(const SetFamily& f) {
  CharacterReport report;
  const auto minimal_union = absorb(f).d_reduct.union_all();
  for (AttrId a = 0; a < f.universe_size(); ++a) {
    AttributeCharacter entry;
    entry.attribute = a;
    const AttrSet single{a};

    Character by_absorption = Character::Unnecessary;
    if (f.contains(single)) {
      by_absorption = Character::Core;
    } else if (minimal_union.contains(a)) {
      by_absorption = Character::RelativeNecessary;
    }
    const auto by_refinement = classify_by_refinement(f, a);
    if (by_absorption != by_refinement) {
      throw InvariantViolation("attribute " + std::to_string(a) + ": absorption rule says " +
                               std::string(to_string(by_absorption)) + ", refinement rule says " +
                               std::string(to_string(by_refinement)));
    }
    entry.character = by_absorption;

    switch (entry.character) {
      case Character::Core:
        entry.core_witness = single;
        break;
      case Character::Unnecessary: {
        const auto e = e_of(f, a);
        for (const auto& k : n_of(f, a)) entry.refinement_witnesses.emplace_back(k, *first_inside(e, k));
        break;
      }
      case Character::RelativeNecessary: {
        const auto e = e_of(f, a);
        for (const auto& k : n_of(f, a)) {
          if (first_inside(e, k) == nullptr) {
            entry.blocking = k;
            break;
          }
        }
        break;
      }
    }
    report.attributes.push_back(std::move(entry));
  }
  return report;
}

bool evidence_holds(const SetFamily& f, const AttributeCharacter& entry) {
  const auto a = entry.attribute;
  switch (entry.character) {
    case Character::Core:
      return entry.core_witness && *entry.core_witness == AttrSet{a} && f.contains(*entry.core_witness);
    case Character::Unnecessary: {
      const auto n = n_of(f, a);
      const auto e = e_of(f, a);
      if (entry.refinement_witnesses.size() != n.size()) return false;
      return std::all_of(entry.refinement_witnesses.begin(), entry.refinement_witnesses.end(), [&](const auto& w) {
        return n.contains(w.first) && e.contains(w.second) && w.second.is_subset_of(w.first);
      });
    }
    case Character::RelativeNecessary: {
      if (!entry.blocking || f.contains(AttrSet{a})) return false;
      const auto e = e_of(f, a);
      return n_of(f, a).contains(*entry.blocking) && first_inside(e, *entry.blocking) == nullptr;
    }
  }
  return false;
}

}  // namespace roughset
