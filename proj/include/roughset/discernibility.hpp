#pragma once

#include <cstddef>
#include <vector>

#include "roughset/information_system.hpp"
#include "roughset/set_family.hpp"

namespace roughset {

/// d(x, y) for every unordered object pair, including empty entries.
class DiscernibilityMatrix {
 public:
  DiscernibilityMatrix(std::size_t object_count, std::size_t attribute_count, std::vector<AttrSet> packed);

  std::size_t object_count() const { return object_count_; }
  std::size_t attribute_count() const { return attribute_count_; }
  std::size_t pair_count() const { return entries_.size(); }

  /// Symmetric; the diagonal is empty.
  const AttrSet& entry(ObjectId x, ObjectId y) const;

  /// Entries in row-major upper-triangular order: (0,1), (0,2), ..., (1,2), ...
  const std::vector<AttrSet>& packed() const { return entries_; }

 private:
  std::size_t index(ObjectId x, ObjectId y) const;

  std::size_t object_count_;
  std::size_t attribute_count_;
  std::vector<AttrSet> entries_;
  AttrSet empty_;
};

DiscernibilityMatrix discernibility_matrix(const InformationSystem& is);

/// Distinct non-empty entries of the matrix.
SetFamily family(const DiscernibilityMatrix& m);

/// N(a): members containing `a`.
SetFamily n_of(const SetFamily& f, AttrId a);

/// E(a): members d with a not in d and d inside the union of N(a).
SetFamily e_of(const SetFamily& f, AttrId a);

/// E(a) through the equivalent rule d inside (union of N(a)) - {a}.
SetFamily e_of_by_lemma(const SetFamily& f, AttrId a);

struct AbsorptionResult {
  SetFamily d_reduct;     // the subset-minimal members
  SetFamily d_reducible;  // members with a proper subset in the family
};

AbsorptionResult absorb(const SetFamily& f);

/// `b` meets every member of `f`. True for an empty family.
bool hits_all(const AttrSet& b, const SetFamily& f);

/// Attributes that occur in no member.
AttrSet uncovered_attributes(const SetFamily& f);

inline constexpr std::size_t kDefaultOracleCap = 20;

/// All reducts as the prime implicants of the CNF over `f`, expanded clause by
/// clause with absorption after each step. Throws ResourceError when more
/// than `max_attrs` attributes occur in `f`.
std::vector<AttrSet> discernibility_function_reducts(const SetFamily& f, std::size_t max_attrs = kDefaultOracleCap);

}  // namespace roughset
