#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <vector>

namespace roughset {

using AttrId = std::size_t;
using ObjectId = std::size_t;

/// Finite set of dense indices stored as a bit vector.
///
/// Trailing zero words are always trimmed, so two sets with the same members
/// compare equal regardless of the order in which they were built. `Tag`
/// keeps attribute sets and object sets from being mixed up.
///
/// The ordering operators implement the canonical order used for every
/// family in this library: smaller cardinality first, then lexicographic on
/// the ascending member lists.
template <class Tag>
class IndexSet {
 public:
  IndexSet() = default;
  IndexSet(std::initializer_list<std::size_t> ids) {
    for (auto id : ids) insert(id);
  }

  /// {0, 1, ..., n-1}
  static IndexSet range(std::size_t n) {
    IndexSet s;
    s.words_.assign((n + 63) / 64, ~std::uint64_t{0});
    if (n % 64 != 0 && !s.words_.empty()) {
      s.words_.back() = (std::uint64_t{1} << (n % 64)) - 1;
    }
    s.trim();
    return s;
  }

  bool contains(std::size_t id) const {
    const auto w = id / 64;
    return w < words_.size() && ((words_[w] >> (id % 64)) & 1U) != 0;
  }

  void insert(std::size_t id) {
    const auto w = id / 64;
    if (w >= words_.size()) words_.resize(w + 1, 0);
    words_[w] |= std::uint64_t{1} << (id % 64);
  }

  void erase(std::size_t id) {
    const auto w = id / 64;
    if (w >= words_.size()) return;
    words_[w] &= ~(std::uint64_t{1} << (id % 64));
    trim();
  }

  bool empty() const { return words_.empty(); }

  std::size_t size() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  /// One past the largest member, 0 for the empty set.
  std::size_t bound() const {
    if (words_.empty()) return 0;
    return (words_.size() - 1) * 64 + (64 - static_cast<std::size_t>(std::countl_zero(words_.back())));
  }

  bool is_subset_of(const IndexSet& other) const {
    if (words_.size() > other.words_.size()) return false;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if ((words_[i] & ~other.words_[i]) != 0) return false;
    }
    return true;
  }

  bool is_proper_subset_of(const IndexSet& other) const { return is_subset_of(other) && *this != other; }

  bool intersects(const IndexSet& other) const {
    const auto n = std::min(words_.size(), other.words_.size());
    for (std::size_t i = 0; i < n; ++i) {
      if ((words_[i] & other.words_[i]) != 0) return true;
    }
    return false;
  }

  std::optional<std::size_t> first() const { return next_from(0); }

  /// Smallest member >= `from`.
  std::optional<std::size_t> next_from(std::size_t from) const {
    std::size_t w = from / 64;
    if (w >= words_.size()) return std::nullopt;
    std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (from % 64));
    while (true) {
      if (bits != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
      if (++w >= words_.size()) return std::nullopt;
      bits = words_[w];
    }
  }

  std::optional<std::size_t> last() const {
    if (words_.empty()) return std::nullopt;
    return bound() - 1;
  }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        fn(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for_each([&](std::size_t id) { out.push_back(id); });
    return out;
  }

  IndexSet& operator|=(const IndexSet& o) {
    if (o.words_.size() > words_.size()) words_.resize(o.words_.size(), 0);
    for (std::size_t i = 0; i < o.words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  IndexSet& operator&=(const IndexSet& o) {
    if (words_.size() > o.words_.size()) words_.resize(o.words_.size());
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    trim();
    return *this;
  }

  IndexSet& operator-=(const IndexSet& o) {
    const auto n = std::min(words_.size(), o.words_.size());
    for (std::size_t i = 0; i < n; ++i) words_[i] &= ~o.words_[i];
    trim();
    return *this;
  }

  friend IndexSet operator|(IndexSet a, const IndexSet& b) { return a |= b; }
  friend IndexSet operator&(IndexSet a, const IndexSet& b) { return a &= b; }
  friend IndexSet operator-(IndexSet a, const IndexSet& b) { return a -= b; }

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

  friend std::strong_ordering operator<=>(const IndexSet& a, const IndexSet& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    auto x = a.first();
    auto y = b.first();
    while (x && y) {
      if (*x != *y) return *x <=> *y;
      x = a.next_from(*x + 1);
      y = b.next_from(*y + 1);
    }
    return std::strong_ordering::equal;
  }

  /// Raw words, least significant first. Exposed for hashing.
  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  void trim() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
  }

  std::vector<std::uint64_t> words_;
};

struct AttrTag {};
struct ObjTag {};

using AttrSet = IndexSet<AttrTag>;
using ObjSet = IndexSet<ObjTag>;

/// Set whose members are the positions of the one bits in `mask`.
template <class Tag = AttrTag>
IndexSet<Tag> set_from_mask(std::uint64_t mask) {
  IndexSet<Tag> s;
  while (mask != 0) {
    s.insert(static_cast<std::size_t>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return s;
}

}  // namespace roughset
