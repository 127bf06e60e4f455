#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "roughset/information_system.hpp"
#include "roughset/set_family.hpp"

namespace roughset {

/// a is finer than b: the partition of {a} refines that of {b}. Also checks
/// the membership criterion (a in every member of N(b)) and throws
/// InvariantViolation if the two disagree. `f` must be the system's family.
bool attr_finer(const InformationSystem& is, const SetFamily& f, AttrId a, AttrId b);
bool attr_finer(const InformationSystem& is, AttrId a, AttrId b);

/// Membership criterion alone, for inputs given only as a family.
bool attr_finer_by_family(const SetFamily& f, AttrId a, AttrId b);

/// Same partition, cross-checked against N(a) = N(b).
bool attr_equivalent(const InformationSystem& is, const SetFamily& f, AttrId a, AttrId b);
bool attr_equivalent(const InformationSystem& is, AttrId a, AttrId b);

/// Every reduct contains both a and b or neither. `reducts` must be complete.
bool coupled(const std::vector<AttrSet>& reducts, AttrId a, AttrId b);

/// No reduct contains both all of `c` and `a`. `reducts` must be complete.
bool excludes(const std::vector<AttrSet>& reducts, const AttrSet& c, AttrId a);

struct ExclusionQuery {
  AttrSet c;
  AttrId a = 0;
  bool holds = false;
};

struct RelationReport {
  std::vector<std::pair<AttrId, AttrId>> finer_pairs;       // (a, b), a != b, a finer than b
  std::vector<std::pair<AttrId, AttrId>> equivalent_pairs;  // a < b
  std::vector<std::pair<AttrId, AttrId>> coupled_pairs;     // a < b
  std::vector<ExclusionQuery> exclusions;
};

RelationReport relation_report(const InformationSystem& is, const std::vector<AttrSet>& reducts,
                               const std::vector<std::pair<AttrSet, AttrId>>& queries = {});

/// Family-only variant; finer/equivalent use the membership criteria.
RelationReport relation_report(const SetFamily& f, const std::vector<AttrSet>& reducts,
                               const std::vector<std::pair<AttrSet, AttrId>>& queries = {});

/// One evaluated instance of a quantified claim.
struct AuditEntry {
  std::string claim;     // e.g. "thm_3_5"
  std::string instance;  // name of the audited system
  std::string subject;   // attributes (and sets) the claim was instantiated at
  bool lhs = false;
  bool rhs = false;
  bool implication = false;  // lhs => rhs rather than lhs <=> rhs
  bool agree = false;
  std::string witness;  // the set that decided a quantified side, if any
};

struct AuditReport {
  std::vector<AuditEntry> entries;
  std::vector<std::string> notes;

  std::vector<AuditEntry> disagreements() const;
  std::vector<AuditEntry> of(const std::string& claim) const;
  bool agrees(const std::string& claim) const;

  void append(const AuditReport& other);
};

inline constexpr std::size_t kDefaultAuditCap = 10;

/// Names of the audited claims, in report order.
const std::vector<std::string>& audited_claims();

/// Evaluates both sides of every audited claim by exhaustive enumeration of
/// attribute subsets and the complete reduct list. Disagreements are
/// recorded, never thrown. Throws ResourceError above `max_attrs` attributes.
AuditReport audit_theorems(const InformationSystem& is, std::size_t max_attrs = kDefaultAuditCap,
                           const std::string& instance = "system");

/// Same for a bare family; claims that need object partitions are skipped.
AuditReport audit_family(const SetFamily& f, const std::vector<std::string>& names,
                         std::size_t max_attrs = kDefaultAuditCap, const std::string& instance = "family");

}  // namespace roughset
