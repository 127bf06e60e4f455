#pragma once

#include <vector>

#include "roughset/index_set.hpp"
#include "roughset/information_system.hpp"

namespace roughset {

/// Pairwise-disjoint non-empty blocks covering objects 0..n-1 exactly once.
/// Blocks are kept sorted by their smallest member, so equal partitions are
/// structurally equal.
class Partition {
 public:
  Partition(std::size_t universe_size, std::vector<ObjSet> blocks);

  std::size_t universe_size() const { return universe_size_; }
  const std::vector<ObjSet>& blocks() const { return blocks_; }
  std::size_t block_count() const { return blocks_.size(); }

  /// Index of the block holding `x`.
  std::size_t block_of(ObjectId x) const { return block_index_.at(x); }

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.universe_size_ == b.universe_size_ && a.blocks_ == b.blocks_;
  }

 private:
  std::size_t universe_size_;
  std::vector<ObjSet> blocks_;
  std::vector<std::size_t> block_index_;
};

/// U/R_B: objects share a block iff they agree on every attribute of `b`.
Partition indiscernibility_partition(const InformationSystem& is, const AttrSet& b);

/// Every block of `p` lies inside some block of `q`.
bool refines(const Partition& p, const Partition& q);

bool is_consistent(const InformationSystem& is, const AttrSet& b);
bool is_reduct(const InformationSystem& is, const AttrSet& b);

struct Approximation {
  ObjSet lower;
  ObjSet upper;
};

Approximation approximations(const Partition& p, const ObjSet& x);

/// `x` is a union of blocks.
bool is_precise(const Partition& p, const ObjSet& x);

}  // namespace roughset
