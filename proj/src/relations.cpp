#include "roughset/relations.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "roughset/covering.hpp"
#include "roughset/discernibility.hpp"
#include "roughset/errors.hpp"
#include "roughset/partition.hpp"
#include "roughset/reducers.hpp"

namespace roughset {

bool attr_finer_by_family(const SetFamily& f, AttrId a, AttrId b) {
  const auto nb = n_of(f, b);
  return std::all_of(nb.begin(), nb.end(), [a](const AttrSet& k) { return k.contains(a); });
}

bool attr_finer(const InformationSystem& is, const SetFamily& f, AttrId a, AttrId b) {
  const bool by_partition =
      refines(indiscernibility_partition(is, AttrSet{a}), indiscernibility_partition(is, AttrSet{b}));
  if (by_partition != attr_finer_by_family(f, a, b)) {
    throw InvariantViolation("finer(" + is.attribute_name(a) + ", " + is.attribute_name(b) +
                             "): partition and membership criteria disagree");
  }
  return by_partition;
}

bool attr_finer(const InformationSystem& is, AttrId a, AttrId b) {
  return attr_finer(is, family(discernibility_matrix(is)), a, b);
}

bool attr_equivalent(const InformationSystem& is, const SetFamily& f, AttrId a, AttrId b) {
  const bool by_partition = attr_finer(is, f, a, b) && attr_finer(is, f, b, a);
  if (by_partition != (n_of(f, a) == n_of(f, b))) {
    throw InvariantViolation("equivalent(" + is.attribute_name(a) + ", " + is.attribute_name(b) +
                             "): partition and N criteria disagree");
  }
  return by_partition;
}

bool attr_equivalent(const InformationSystem& is, AttrId a, AttrId b) {
  return attr_equivalent(is, family(discernibility_matrix(is)), a, b);
}

bool coupled(const std::vector<AttrSet>& reducts, AttrId a, AttrId b) {
  return std::all_of(reducts.begin(), reducts.end(),
                     [&](const AttrSet& r) { return r.contains(a) == r.contains(b); });
}

bool excludes(const std::vector<AttrSet>& reducts, const AttrSet& c, AttrId a) {
  return std::none_of(reducts.begin(), reducts.end(),
                      [&](const AttrSet& r) { return c.is_subset_of(r) && r.contains(a); });
}

namespace {

template <class Finer>
RelationReport build_report(std::size_t k, const SetFamily& f, const std::vector<AttrSet>& reducts,
                            const std::vector<std::pair<AttrSet, AttrId>>& queries, Finer&& finer) {
  RelationReport out;
  for (AttrId a = 0; a < k; ++a) {
    for (AttrId b = 0; b < k; ++b) {
      if (a != b && finer(a, b)) out.finer_pairs.emplace_back(a, b);
    }
  }
  for (AttrId a = 0; a < k; ++a) {
    for (AttrId b = a + 1; b < k; ++b) {
      if (n_of(f, a) == n_of(f, b)) out.equivalent_pairs.emplace_back(a, b);
      if (coupled(reducts, a, b)) out.coupled_pairs.emplace_back(a, b);
    }
  }
  for (const auto& [c, a] : queries) out.exclusions.push_back({c, a, excludes(reducts, c, a)});
  return out;
}

}  // namespace

RelationReport relation_report(const InformationSystem& is, const std::vector<AttrSet>& reducts,
                               const std::vector<std::pair<AttrSet, AttrId>>& queries) {
  const auto f = family(discernibility_matrix(is));
  auto out = build_report(is.attribute_count(), f, reducts, queries,
                          [&](AttrId a, AttrId b) { return attr_finer(is, f, a, b); });
  for (const auto& [a, b] : out.equivalent_pairs) {
    if (!attr_equivalent(is, f, a, b)) throw InvariantViolation("equivalent pair fails the partition check");
  }
  return out;
}

RelationReport relation_report(const SetFamily& f, const std::vector<AttrSet>& reducts,
                               const std::vector<std::pair<AttrSet, AttrId>>& queries) {
  return build_report(f.universe_size(), f, reducts, queries,
                      [&](AttrId a, AttrId b) { return attr_finer_by_family(f, a, b); });
}

// ---------------------------------------------------------------------------
// Audit

std::vector<AuditEntry> AuditReport::disagreements() const {
  std::vector<AuditEntry> out;
  std::copy_if(entries.begin(), entries.end(), std::back_inserter(out), [](const AuditEntry& e) { return !e.agree; });
  return out;
}

std::vector<AuditEntry> AuditReport::of(const std::string& claim) const {
  std::vector<AuditEntry> out;
  std::copy_if(entries.begin(), entries.end(), std::back_inserter(out),
               [&](const AuditEntry& e) { return e.claim == claim; });
  return out;
}

bool AuditReport::agrees(const std::string& claim) const {
  return std::all_of(entries.begin(), entries.end(),
                     [&](const AuditEntry& e) { return e.claim != claim || e.agree; });
}

void AuditReport::append(const AuditReport& other) {
  entries.insert(entries.end(), other.entries.begin(), other.entries.end());
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
}

const std::vector<std::string>& audited_claims() {
  static const std::vector<std::string> claims = {
      "thm_3_5", "thm_3_6",         "thm_3_7",         "cor_3_6",         "cor_4_2", "thm_4_7", "thm_5_1_finer",
      "thm_5_1_neighborhood",       "thm_5_1_equivalent", "thm_5_2",    "thm_5_3", "cor_5_1", "thm_5_4",
      "finer_excludes_pair"};
  return claims;
}

namespace {

using Mask = std::uint64_t;

Mask to_mask(const AttrSet& s) {
  Mask m = 0;
  s.for_each([&](AttrId a) { m |= Mask{1} << a; });
  return m;
}

bool hits(Mask c, const std::vector<Mask>& fam) {
  return std::all_of(fam.begin(), fam.end(), [c](Mask d) { return (c & d) != 0; });
}

Mask bit(AttrId a) { return Mask{1} << a; }

class Auditor {
 public:
  Auditor(const SetFamily& f, const std::vector<std::string>& names, std::string instance)
      : names_(names), instance_(std::move(instance)), k_(f.universe_size()), subsets_(Mask{1} << k_) {
    for (const auto& d : f) fam_.push_back(to_mask(d));
    for (const auto& r : all_reducts_bruteforce(f, AttrSet::range(k_), k_)) reducts_.push_back(to_mask(r));
    in_all_ = subsets_ - 1;
    for (auto r : reducts_) {
      in_some_ |= r;
      in_all_ &= r;
    }
    for (const auto& d : absorb(f).d_reduct) d_reduct_.push_back(to_mask(d));
    for (AttrId a = 0; a < k_; ++a) {
      std::vector<Mask> n;
      std::vector<Mask> e;
      for (auto d : fam_) {
        if (d & bit(a)) n.push_back(d);
      }
      Mask cover = 0;
      for (auto d : n) cover |= d;
      for (auto d : fam_) {
        if (!(d & bit(a)) && (d & ~cover) == 0) e.push_back(d);
      }
      n_.push_back(std::move(n));
      e_.push_back(std::move(e));
    }
  }

  void run_attribute_claims() {
    for (AttrId a = 0; a < k_; ++a) {
      const auto& n = n_[a];
      const auto& e = e_[a];
      const bool unnecessary = !(in_some_ & bit(a));
      const bool core = (in_all_ & bit(a)) != 0;
      const bool relative = !unnecessary && !core;
      const bool singleton = std::find(fam_.begin(), fam_.end(), bit(a)) != fam_.end();
      const auto subject = "a=" + names_[a];

      Mask e_union = 0;
      for (auto d : e) e_union |= d;

      // Every C (inside `domain`) that meets all of E(a) meets all of N(a).
      auto e_hitters_hit_n = [&](Mask domain) -> std::optional<Mask> {
        for (Mask c = 0; c < subsets_; ++c) {
          if ((c & ~domain) != 0) continue;
          if (hits(c, e) && !hits(c, n)) return c;
        }
        return std::nullopt;
      };

      {
        const auto bad = e_hitters_hit_n(e_union);
        record("thm_3_5", subject, unnecessary, !bad, false, bad ? "C=" + str(*bad) : "");
      }
      {
        const auto bad = e_hitters_hit_n(subsets_ - 1);
        record("thm_3_6", subject, unnecessary, !bad, false, bad ? "C=" + str(*bad) : "");
        record("thm_3_7", subject, relative, !singleton && bad.has_value(), false, bad ? "C=" + str(*bad) : "");
      }
      {
        std::optional<std::pair<Mask, Mask>> found;
        for (Mask c = 0; c < subsets_ && !found; ++c) {
          if (!hits(c, e)) continue;
          for (auto fm : n) {
            if ((c & fm) == 0) {
              found = std::make_pair(c, fm);
              break;
            }
          }
        }
        record("cor_3_6", subject, relative, !singleton && found.has_value(), false,
               found ? "C=" + str(found->first) + " F=" + str(found->second) : "");
      }
      {
        std::optional<Mask> failing;
        for (auto d : fam_) {
          if (d & bit(a)) continue;
          const bool escapes = std::any_of(n.begin(), n.end(), [d](Mask k) { return (d & ~k) != 0; });
          if (!escapes) {
            failing = d;
            break;
          }
        }
        record("cor_4_2", subject, relative, !singleton && !failing, false, failing ? "d=" + str(*failing) : "");
      }
    }

    for (auto d : d_reduct_) {
      for (AttrId a = 0; a < k_; ++a) {
        if (!(d & bit(a)) || std::popcount(d) < 2) continue;
        const Mask rest = d & ~bit(a);
        std::optional<Mask> avoiding;
        for (auto r : reducts_) {
          if ((r & rest) == 0) {
            avoiding = r;
            break;
          }
        }
        record("thm_4_7", "d=" + str(d) + ", a=" + names_[a], true, avoiding.has_value(), true,
               avoiding ? "B=" + str(*avoiding) : "");
      }
    }
  }

  void run_partition_claims(const InformationSystem& is) {
    std::vector<Partition> parts;
    for (AttrId a = 0; a < k_; ++a) parts.push_back(indiscernibility_partition(is, AttrSet{a}));
    const auto space = CoveringSpace::over_family(SetFamily(k_, [&] {
      std::vector<AttrSet> sets;
      for (auto d : fam_) sets.push_back(set_from_mask(d));
      return sets;
    }()));
    for (AttrId a = 0; a < k_; ++a) {
      for (AttrId b = 0; b < k_; ++b) {
        if (a == b) continue;
        const auto subject = "a=" + names_[a] + ", b=" + names_[b];
        const bool finer = refines(parts[a], parts[b]);
        const auto& nb = n_[b];
        const bool member = std::all_of(nb.begin(), nb.end(), [&](Mask k) { return (k & bit(a)) != 0; });
        record("thm_5_1_finer", subject, finer, member, false, "");
        if (space.ground().contains(b)) {
          record("thm_5_1_neighborhood", subject, finer, space.neighborhood(b).contains(a), false, "");
        }
        if (a < b) {
          record("thm_5_1_equivalent", subject, parts[a] == parts[b], n_[a] == n_[b], false, "");
        }
        finer_excludes(a, b, finer);
      }
    }
  }

  void run_family_only_finer() {
    for (AttrId a = 0; a < k_; ++a) {
      for (AttrId b = 0; b < k_; ++b) {
        if (a == b) continue;
        const auto& nb = n_[b];
        finer_excludes(a, b, std::all_of(nb.begin(), nb.end(), [&](Mask k) { return (k & bit(a)) != 0; }));
      }
    }
  }

  void run_pair_claims() {
    for (AttrId a = 0; a < k_; ++a) {
      for (AttrId b = a + 1; b < k_; ++b) {
        const auto subject = "a=" + names_[a] + ", b=" + names_[b];
        const bool is_coupled =
            std::all_of(reducts_.begin(), reducts_.end(), [&](Mask r) { return !(r & bit(a)) == !(r & bit(b)); });
        const auto& na = n_[a];
        const auto& nb = n_[b];
        std::vector<Mask> nb_minus_na;
        std::vector<Mask> na_minus_nb;
        std::copy_if(nb.begin(), nb.end(), std::back_inserter(nb_minus_na),
                     [&](Mask k) { return std::find(na.begin(), na.end(), k) == na.end(); });
        std::copy_if(na.begin(), na.end(), std::back_inserter(na_minus_nb),
                     [&](Mask k) { return std::find(nb.begin(), nb.end(), k) == nb.end(); });

        // First C violating `premise(C) => conclusion(C)` in either direction.
        auto first_violation = [&](auto&& forward, auto&& backward) -> std::optional<Mask> {
          for (Mask c = 0; c < subsets_; ++c) {
            if (!forward(c) || !backward(c)) return c;
          }
          return std::nullopt;
        };

        const auto v52 = first_violation([&](Mask c) { return !hits(c, nb) || hits(c, na); },
                                         [&](Mask c) { return !hits(c, na) || hits(c, nb); });
        record("thm_5_2", subject, is_coupled, !v52, false, v52 ? "C=" + str(*v52) : "");

        const auto v53 = first_violation([&](Mask c) { return !hits(c | bit(a), nb) || hits(c, na); },
                                         [&](Mask c) { return !hits(c | bit(b), na) || hits(c, nb); });
        record("thm_5_3", subject, is_coupled, !v53, false, v53 ? "C=" + str(*v53) : "");

        const auto v51 = first_violation([&](Mask c) { return !hits(c, nb_minus_na) || hits(c, na); },
                                         [&](Mask c) { return !hits(c, na_minus_nb) || hits(c, nb); });
        record("cor_5_1", subject, is_coupled, !v51, false, v51 ? "C=" + str(*v51) : "");
      }
    }
  }

  void run_exclusion_claims() {
    for (AttrId a = 0; a < k_; ++a) {
      const auto& n = n_[a];
      for (Mask c = 0; c < subsets_; ++c) {
        if (c & bit(a)) continue;
        const bool within_reduct = std::any_of(reducts_.begin(), reducts_.end(), [c](Mask r) { return (c & r) == c; });
        if (!within_reduct) continue;
        const bool lhs =
            std::none_of(reducts_.begin(), reducts_.end(), [&](Mask r) { return (c & r) == c && (r & bit(a)); });
        std::vector<Mask> e_minus_nc;
        std::copy_if(e_[a].begin(), e_[a].end(), std::back_inserter(e_minus_nc), [c](Mask d) { return (d & c) == 0; });
        std::optional<Mask> bad;
        for (Mask d = 0; d < subsets_ && !bad; ++d) {
          if (hits(d, e_minus_nc) && !hits(c | d, n)) bad = d;
        }
        record("thm_5_4", "C=" + str(c) + ", a=" + names_[a], lhs, !bad, false, bad ? "D=" + str(*bad) : "");
      }
    }
  }

  AuditReport take() { return std::move(report_); }
  void note(std::string text) { report_.notes.push_back(std::move(text)); }

 private:
  void finer_excludes(AttrId a, AttrId b, bool finer) {
    std::optional<Mask> both;
    for (auto r : reducts_) {
      if ((r & bit(a)) && (r & bit(b))) {
        both = r;
        break;
      }
    }
    record("finer_excludes_pair", "a=" + names_[a] + ", b=" + names_[b], finer, !both, true,
           both ? "B=" + str(*both) : "");
  }

  void record(const std::string& claim, std::string subject, bool lhs, bool rhs, bool implication,
              std::string witness) {
    AuditEntry e;
    e.claim = claim;
    e.instance = instance_;
    e.subject = std::move(subject);
    e.lhs = lhs;
    e.rhs = rhs;
    e.implication = implication;
    e.agree = implication ? (!lhs || rhs) : (lhs == rhs);
    e.witness = std::move(witness);
    report_.entries.push_back(std::move(e));
  }

  std::string str(Mask m) const { return format_set(set_from_mask(m), names_); }

  const std::vector<std::string>& names_;
  std::string instance_;
  std::size_t k_;
  Mask subsets_;
  std::vector<Mask> fam_;
  std::vector<Mask> reducts_;
  std::vector<Mask> d_reduct_;
  Mask in_some_ = 0;
  Mask in_all_ = 0;
  std::vector<std::vector<Mask>> n_;
  std::vector<std::vector<Mask>> e_;
  AuditReport report_;
};

void check_cap(std::size_t k, std::size_t max_attrs) {
  if (k > max_attrs || k > 24) {
    throw ResourceError("claim audit over " + std::to_string(k) + " attributes exceeds the cap of " +
                        std::to_string(std::min<std::size_t>(max_attrs, 24)));
  }
}

}  // namespace

AuditReport audit_theorems(const InformationSystem& is, std::size_t max_attrs, const std::string& instance) {
  check_cap(is.attribute_count(), max_attrs);
  const auto f = family(discernibility_matrix(is));
  Auditor auditor(f, is.attribute_names(), instance);
  auditor.run_attribute_claims();
  auditor.run_partition_claims(is);
  auditor.run_pair_claims();
  auditor.run_exclusion_claims();
  return auditor.take();
}

AuditReport audit_family(const SetFamily& f, const std::vector<std::string>& names, std::size_t max_attrs,
                         const std::string& instance) {
  check_cap(f.universe_size(), max_attrs);
  Auditor auditor(f, names, instance);
  auditor.run_attribute_claims();
  auditor.run_family_only_finer();
  auditor.run_pair_claims();
  auditor.run_exclusion_claims();
  auditor.note("thm_5_1_* need object partitions and were skipped for family input");
  return auditor.take();
}

}  // namespace roughset
