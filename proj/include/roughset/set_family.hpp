#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "roughset/index_set.hpp"

namespace roughset {

/// Deduplicated collection of non-empty attribute sets over attributes
/// 0..universe_size-1, kept in canonical order (cardinality, then
/// lexicographic on member indices).
class SetFamily {
 public:
  SetFamily() = default;
  /// Drops empty sets and duplicates. Throws InputError if a set mentions an
  /// attribute outside the universe.
  explicit SetFamily(std::size_t universe_size, std::vector<AttrSet> sets = {});

  std::size_t universe_size() const { return universe_size_; }
  std::size_t size() const { return sets_.size(); }
  bool empty() const { return sets_.empty(); }

  const AttrSet& operator[](std::size_t i) const { return sets_[i]; }
  auto begin() const { return sets_.begin(); }
  auto end() const { return sets_.end(); }
  const std::vector<AttrSet>& sets() const { return sets_; }

  bool contains(const AttrSet& s) const;
  AttrSet union_all() const;

  template <class Pred>
  SetFamily filter(Pred&& keep) const {
    SetFamily out;
    out.universe_size_ = universe_size_;
    for (const auto& s : sets_) {
      if (keep(s)) out.sets_.push_back(s);
    }
    return out;
  }

  friend bool operator==(const SetFamily&, const SetFamily&) = default;

 private:
  std::size_t universe_size_ = 0;
  std::vector<AttrSet> sets_;
};

/// Members of `a` that are not members of `b`.
SetFamily family_difference(const SetFamily& a, const SetFamily& b);

/// Attribute names plus the family built over them; what a raw-family JSON
/// document decodes to.
struct NamedFamily {
  std::vector<std::string> names;
  SetFamily family;
};

/// Decodes a JSON array of arrays of attribute-name strings. The universe is
/// the set of distinct names, sorted.
NamedFamily load_family_json(const std::string& text, const std::string& source = "<input>");

/// Looks up names in `names`; throws InputError for unknown ones.
AttrSet attr_set_from_names(const std::vector<std::string>& names, const std::vector<std::string>& members);

/// "{a1, a2}" with members sorted by name.
std::string format_set(const AttrSet& s, const std::vector<std::string>& names);

/// "{{a1, a2}, {a3}}" in family order.
std::string format_family(const SetFamily& f, const std::vector<std::string>& names);

/// Member names sorted by name.
std::vector<std::string> sorted_names(const AttrSet& s, const std::vector<std::string>& names);

}  // namespace roughset
