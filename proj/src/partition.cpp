#include "roughset/partition.hpp"

#include <algorithm>
#include <map>

#include "roughset/errors.hpp"

namespace roughset {

Partition::Partition(std::size_t universe_size, std::vector<ObjSet> blocks)
    : universe_size_(universe_size), blocks_(std::move(blocks)), block_index_(universe_size, universe_size) {
  std::sort(blocks_.begin(), blocks_.end(), [](const ObjSet& a, const ObjSet& b) { return *a.first() < *b.first(); });
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (blocks_[i].empty()) throw InputError("partition block is empty");
    blocks_[i].for_each([&](ObjectId x) {
      if (x >= universe_size_) throw InputError("partition block member outside the universe");
      if (block_index_[x] != universe_size_) throw InputError("partition blocks overlap");
      block_index_[x] = i;
    });
  }
  if (std::find(block_index_.begin(), block_index_.end(), universe_size_) != block_index_.end()) {
    throw InputError("partition blocks do not cover the universe");
  }
}

Partition indiscernibility_partition(const InformationSystem& is, const AttrSet& b) {
  is.check_attributes(b);
  const auto attrs = b.members();
  std::map<std::vector<std::uint32_t>, std::size_t> block_of_key;
  std::vector<ObjSet> blocks;
  std::vector<std::uint32_t> key(attrs.size());
  for (ObjectId x = 0; x < is.object_count(); ++x) {
    for (std::size_t i = 0; i < attrs.size(); ++i) key[i] = is.code(x, attrs[i]);
    auto [it, inserted] = block_of_key.try_emplace(key, blocks.size());
    if (inserted) blocks.emplace_back();
    blocks[it->second].insert(x);
  }
  return Partition(is.object_count(), std::move(blocks));
}

bool refines(const Partition& p, const Partition& q) {
  if (p.universe_size() != q.universe_size()) {
    throw InputError("partitions are over different object universes");
  }
  for (const auto& block : p.blocks()) {
    const auto target = q.block_of(*block.first());
    bool inside = true;
    block.for_each([&](ObjectId x) { inside = inside && q.block_of(x) == target; });
    if (!inside) return false;
  }
  return true;
}

bool is_consistent(const InformationSystem& is, const AttrSet& b) {
  return indiscernibility_partition(is, b) == indiscernibility_partition(is, is.all_attributes());
}

bool is_reduct(const InformationSystem& is, const AttrSet& b) {
  const auto full = indiscernibility_partition(is, is.all_attributes());
  if (indiscernibility_partition(is, b) != full) return false;
  bool minimal = true;
  b.for_each([&](AttrId a) {
    if (minimal && indiscernibility_partition(is, b - AttrSet{a}) == full) minimal = false;
  });
  return minimal;
}

Approximation approximations(const Partition& p, const ObjSet& x) {
  if (x.bound() > p.universe_size()) throw InputError("object set exceeds the partition's universe");
  Approximation out;
  for (const auto& block : p.blocks()) {
    if (block.is_subset_of(x)) out.lower |= block;
    if (block.intersects(x)) out.upper |= block;
  }
  return out;
}

bool is_precise(const Partition& p, const ObjSet& x) {
  const auto ap = approximations(p, x);
  return ap.lower == ap.upper;
}

}  // namespace roughset
