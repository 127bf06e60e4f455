#include "roughset/discernibility.hpp"

#include <algorithm>

#include "roughset/errors.hpp"

namespace roughset {

DiscernibilityMatrix::DiscernibilityMatrix(std::size_t object_count, std::size_t attribute_count,
                                           std::vector<AttrSet> packed)
    : object_count_(object_count), attribute_count_(attribute_count), entries_(std::move(packed)) {
  if (entries_.size() != object_count_ * (object_count_ - (object_count_ > 0 ? 1 : 0)) / 2) {
    throw InputError("packed matrix size does not match the object count");
  }
}

std::size_t DiscernibilityMatrix::index(ObjectId x, ObjectId y) const {
  // Row x of the upper triangle starts after x rows of decreasing length.
  return x * (2 * object_count_ - x - 1) / 2 + (y - x - 1);
}

const AttrSet& DiscernibilityMatrix::entry(ObjectId x, ObjectId y) const {
  if (x >= object_count_ || y >= object_count_) throw InputError("object id out of range");
  if (x == y) return empty_;
  if (x > y) std::swap(x, y);
  return entries_[index(x, y)];
}

DiscernibilityMatrix discernibility_matrix(const InformationSystem& is) {
  const auto n = is.object_count();
  const auto m = is.attribute_count();
  std::vector<AttrSet> packed;
  packed.reserve(n * (n - 1) / 2);
  for (ObjectId x = 0; x < n; ++x) {
    for (ObjectId y = x + 1; y < n; ++y) {
      AttrSet d;
      for (AttrId a = 0; a < m; ++a) {
        if (is.code(x, a) != is.code(y, a)) d.insert(a);
      }
      packed.push_back(std::move(d));
    }
  }
  return DiscernibilityMatrix(n, m, std::move(packed));
}

SetFamily family(const DiscernibilityMatrix& m) { return SetFamily(m.attribute_count(), m.packed()); }

SetFamily n_of(const SetFamily& f, AttrId a) {
  return f.filter([a](const AttrSet& d) { return d.contains(a); });
}

SetFamily e_of(const SetFamily& f, AttrId a) {
  const auto cover = n_of(f, a).union_all();
  return f.filter([&](const AttrSet& d) { return !d.contains(a) && d.is_subset_of(cover); });
}

SetFamily e_of_by_lemma(const SetFamily& f, AttrId a) {
  const auto bound = n_of(f, a).union_all() - AttrSet{a};
  return f.filter([&](const AttrSet& d) { return d.is_subset_of(bound); });
}

AbsorptionResult absorb(const SetFamily& f) {
  auto reducible = [&](const AttrSet& d) {
    return std::any_of(f.begin(), f.end(), [&](const AttrSet& k) { return k.is_proper_subset_of(d); });
  };
  return {f.filter([&](const AttrSet& d) { return !reducible(d); }), f.filter(reducible)};
}

bool hits_all(const AttrSet& b, const SetFamily& f) {
  return std::all_of(f.begin(), f.end(), [&](const AttrSet& d) { return b.intersects(d); });
}

AttrSet uncovered_attributes(const SetFamily& f) { return AttrSet::range(f.universe_size()) - f.union_all(); }

namespace {

// Keeps the subset-minimal terms, deduplicated, in canonical order.
std::vector<AttrSet> minimal_terms(std::vector<AttrSet> terms) {
  std::sort(terms.begin(), terms.end());
  terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
  std::vector<AttrSet> kept;
  for (auto& t : terms) {
    const bool absorbed =
        std::any_of(kept.begin(), kept.end(), [&](const AttrSet& k) { return k.is_subset_of(t); });
    if (!absorbed) kept.push_back(std::move(t));
  }
  return kept;
}

}  // namespace

std::vector<AttrSet> discernibility_function_reducts(const SetFamily& f, std::size_t max_attrs) {
  const auto involved = f.union_all().size();
  if (involved > max_attrs) {
    throw ResourceError("discernibility function expansion over " + std::to_string(involved) +
                        " attributes exceeds the cap of " + std::to_string(max_attrs) +
                        "; use a single-reduct algorithm (ea or yao) instead");
  }
  std::vector<AttrSet> terms{AttrSet{}};
  for (const auto& clause : f) {
    std::vector<AttrSet> next;
    for (const auto& t : terms) {
      if (t.intersects(clause)) {
        next.push_back(t);
        continue;
      }
      clause.for_each([&](AttrId a) {
        auto extended = t;
        extended.insert(a);
        next.push_back(std::move(extended));
      });
    }
    terms = minimal_terms(std::move(next));
  }
  return terms;
}

}  // namespace roughset
