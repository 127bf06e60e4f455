#pragma once

#include "roughset/set_family.hpp"

namespace roughset {

/// The four conditions on an element x of a covering that are claimed to be
/// equivalent: {x} is a member, Md(x) = {{x}}, lower({x}) = {x}, and
/// Md(x) = {lower({x})}.
struct SingletonEquivalences {
  bool singleton_in_cover = false;
  bool md_is_singleton = false;
  bool lower_is_singleton = false;
  bool md_is_lower = false;

  bool all_equal() const {
    return singleton_in_cover == md_is_singleton && md_is_singleton == lower_is_singleton &&
           lower_is_singleton == md_is_lower;
  }
  bool all_true() const { return singleton_in_cover && md_is_singleton && lower_is_singleton && md_is_lower; }
};

/// Covering approximation space over attribute ids.
class CoveringSpace {
 public:
  enum class Uncovered { Reject, PadWithSingletons };

  /// Throws InputError when an element of `ground` is in no member and
  /// `policy` is Reject, or when a member leaves `ground`.
  CoveringSpace(AttrSet ground, SetFamily cover, Uncovered policy = Uncovered::Reject);

  /// Ground set = the union of the family, so every element is covered.
  /// Attributes of the family's universe outside it are what
  /// uncovered_attributes() reports.
  static CoveringSpace over_family(const SetFamily& f);

  const AttrSet& ground() const { return ground_; }
  const SetFamily& cover() const { return cover_; }

  /// Md(x): subset-minimal members containing x.
  SetFamily minimal_description(AttrId x) const;
  /// Intersection of all members containing x.
  AttrSet neighborhood(AttrId x) const;

  AttrSet lower(const AttrSet& x) const;
  AttrSet upper(const AttrSet& x) const;

  SingletonEquivalences singleton_equivalences(AttrId x) const;

 private:
  void require_covered(AttrId x) const;

  AttrSet ground_;
  SetFamily cover_;
};

}  // namespace roughset
