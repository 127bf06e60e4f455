#include "roughset/covering.hpp"

#include "roughset/discernibility.hpp"
#include "roughset/errors.hpp"

namespace roughset {

CoveringSpace::CoveringSpace(AttrSet ground, SetFamily cover, Uncovered policy)
    : ground_(std::move(ground)), cover_(std::move(cover)) {
  const auto covered = cover_.union_all();
  if (!covered.is_subset_of(ground_)) throw InputError("cover member leaves the ground set");
  const auto missing = ground_ - covered;
  if (missing.empty()) return;
  if (policy == Uncovered::Reject) {
    throw InputError("element " + std::to_string(*missing.first()) + " of the ground set is not covered");
  }
  std::vector<AttrSet> sets = cover_.sets();
  missing.for_each([&](AttrId x) { sets.push_back(AttrSet{x}); });
  cover_ = SetFamily(cover_.universe_size(), std::move(sets));
}

CoveringSpace CoveringSpace::over_family(const SetFamily& f) { return CoveringSpace(f.union_all(), f); }

void CoveringSpace::require_covered(AttrId x) const {
  if (!ground_.contains(x)) throw InputError("element " + std::to_string(x) + " is not covered");
}

SetFamily CoveringSpace::minimal_description(AttrId x) const {
  require_covered(x);
  return absorb(n_of(cover_, x)).d_reduct;
}

AttrSet CoveringSpace::neighborhood(AttrId x) const {
  require_covered(x);
  std::optional<AttrSet> acc;
  for (const auto& k : cover_) {
    if (!k.contains(x)) continue;
    acc = acc ? (*acc & k) : k;
  }
  return *acc;
}

AttrSet CoveringSpace::lower(const AttrSet& x) const {
  AttrSet out;
  for (const auto& k : cover_) {
    if (k.is_subset_of(x)) out |= k;
  }
  return out;
}

AttrSet CoveringSpace::upper(const AttrSet& x) const {
  AttrSet out;
  for (const auto& k : cover_) {
    if (k.intersects(x)) out |= k;
  }
  return out;
}

SingletonEquivalences CoveringSpace::singleton_equivalences(AttrId x) const {
  const AttrSet single{x};
  const auto md = minimal_description(x);
  const auto low = lower(single);
  SingletonEquivalences out;
  out.singleton_in_cover = cover_.contains(single);
  out.md_is_singleton = md.size() == 1 && md[0] == single;
  out.lower_is_singleton = low == single;
  out.md_is_lower = md.size() == 1 && md[0] == low;
  return out;
}

}  // namespace roughset
