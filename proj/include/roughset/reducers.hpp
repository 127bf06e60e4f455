#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "roughset/discernibility.hpp"
#include "roughset/set_family.hpp"

namespace roughset {

/// How an attribute is picked from a target set.
enum class SelectionPolicy {
  First,         // lowest attribute index in the target
  MaxFrequency,  // occurs in the most remaining members; ties go to the lowest index
};

std::string_view to_string(SelectionPolicy p);

/// Picks from `target`. `remaining` is the context MaxFrequency counts over.
AttrId select_attribute(const AttrSet& target, const std::vector<AttrSet>& remaining, SelectionPolicy policy);

/// Every subset-minimal hitting set of `f` drawn from `universe`, in canonical
/// order, by exhaustive enumeration. Throws ResourceError when the universe
/// has more than `max_attrs` attributes.
std::vector<AttrSet> all_reducts_bruteforce(const SetFamily& f, const AttrSet& universe,
                                            std::size_t max_attrs = kDefaultOracleCap);

/// Same, with the universe taken to be the union of `f`.
std::vector<AttrSet> all_reducts_bruteforce(const SetFamily& f, std::size_t max_attrs = kDefaultOracleCap);

struct YaoStep {
  std::size_t entry = 0;  // index into the initial entry list
  AttrSet visited;        // value of the entry when visited
  AttrSet absorbed;       // subset-minimal entry it was replaced by
  AttrId chosen = 0;
  AttrSet remainder;  // absorbed - {chosen}, removed from entries without `chosen`
  std::vector<AttrSet> entries_after;
};

struct YaoTrace {
  std::vector<AttrSet> initial;
  std::vector<YaoStep> steps;
};

struct YaoResult {
  AttrSet reduct;
  YaoTrace trace;
};

/// Row-wise simplification. Entries are the members of `f`, visited
/// largest-first (reverse canonical order). Each unresolved entry is replaced
/// by a subset-minimal entry below it, split into {a} and a remainder, every
/// entry holding a collapses to {a}, and the remainder is removed from the
/// rest. The result is the union of the final singletons.
YaoResult yao_row_wise(const SetFamily& f, SelectionPolicy policy);

/// RED of a family: a minimal hitting set inside its union, via yao_row_wise.
AttrSet red_of_family(const SetFamily& f, SelectionPolicy policy);

struct EaStep {
  AttrId chosen = 0;
  SetFamily n;    // N(chosen) over the current family
  SetFamily e;    // E(chosen) over the current family
  AttrSet red;    // red_of_family(e)
  bool a_added = false;
  std::optional<AttrSet> missed_by_red;  // first K in n with red and K disjoint
  SetFamily family_after;                // current family minus the union of n
};

struct ReductTrace {
  std::vector<EaStep> iterations;
  AttrSet unminimized;
  AttrSet result;
  bool minimized = false;
  std::vector<AttrId> removed;  // dropped by the minimizing pass, in order
};

struct EaResult {
  AttrSet reduct;
  ReductTrace trace;
};

/// Reduct construction driven by E(a). Each round picks a from the first
/// member of the current family, adds RED of E(a), adds a itself when that
/// RED misses some member of N(a), and removes the union of N(a) from every
/// member. With `minimize`, attributes whose removal keeps every member of
/// `f` hit are then dropped, highest index first.
EaResult ea_reduce(const SetFamily& f, SelectionPolicy policy, bool minimize = true);

/// Re-derives every step of `trace` from `f` using the recorded choices.
/// Returns a description of the first mismatch, or nothing if it replays.
std::optional<std::string> replay_ea_trace(const SetFamily& f, const ReductTrace& trace, SelectionPolicy policy);

struct ReductDiagnosis {
  enum class Kind { Valid, NotHitting, NotMinimal };
  Kind kind = Kind::Valid;
  std::optional<AttrSet> missed;     // NotHitting: a member disjoint from b
  std::optional<AttrId> removable;  // NotMinimal: highest attribute that can go

  bool valid() const { return kind == Kind::Valid; }
};

ReductDiagnosis verify_reduct(const SetFamily& f, const AttrSet& b);

}  // namespace roughset
