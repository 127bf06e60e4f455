#include "roughset/reducers.hpp"

#include <algorithm>
#include <cstdint>

#include "roughset/errors.hpp"

namespace roughset {

std::string_view to_string(SelectionPolicy p) {
  return p == SelectionPolicy::First ? "first" : "freq";
}

AttrId select_attribute(const AttrSet& target, const std::vector<AttrSet>& remaining, SelectionPolicy policy) {
  if (target.empty()) throw InvariantViolation("attribute selection from an empty set");
  if (policy == SelectionPolicy::First) return *target.first();
  AttrId best = *target.first();
  std::size_t best_count = 0;
  target.for_each([&](AttrId a) {
    const auto count = static_cast<std::size_t>(
        std::count_if(remaining.begin(), remaining.end(), [a](const AttrSet& s) { return s.contains(a); }));
    if (count > best_count) {
      best = a;
      best_count = count;
    }
  });
  return best;
}

std::vector<AttrSet> all_reducts_bruteforce(const SetFamily& f, const AttrSet& universe, std::size_t max_attrs) {
  const auto pool = universe.members();
  if (pool.size() > max_attrs || pool.size() >= 63) {
    throw ResourceError("exhaustive reduct enumeration over " + std::to_string(pool.size()) +
                        " attributes exceeds the cap of " + std::to_string(max_attrs));
  }
  // Members as masks over positions in `pool`.
  std::vector<std::uint64_t> clauses;
  for (const auto& d : f) {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (d.contains(pool[i])) mask |= std::uint64_t{1} << i;
    }
    if (mask == 0) return {};
    clauses.push_back(mask);
  }
  auto hits = [&](std::uint64_t b) {
    return std::all_of(clauses.begin(), clauses.end(), [b](std::uint64_t c) { return (b & c) != 0; });
  };

  std::vector<AttrSet> out;
  const std::uint64_t limit = std::uint64_t{1} << pool.size();
  for (std::uint64_t b = 0; b < limit; ++b) {
    if (!hits(b)) continue;
    bool minimal = true;
    for (std::uint64_t rest = b; rest != 0 && minimal; rest &= rest - 1) {
      if (hits(b & ~(rest & (~rest + 1)))) minimal = false;
    }
    if (!minimal) continue;
    AttrSet s;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if ((b >> i) & 1U) s.insert(pool[i]);
    }
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<AttrSet> all_reducts_bruteforce(const SetFamily& f, std::size_t max_attrs) {
  return all_reducts_bruteforce(f, f.union_all(), max_attrs);
}

YaoResult yao_row_wise(const SetFamily& f, SelectionPolicy policy) {
  YaoResult out;
  std::vector<AttrSet> entries = f.sets();
  std::vector<bool> resolved(entries.size(), false);
  out.trace.initial = entries;

  for (std::size_t pos = entries.size(); pos-- > 0;) {
    if (resolved[pos] || entries[pos].empty()) continue;
    YaoStep step;
    step.entry = pos;
    step.visited = entries[pos];

    // Walk down to a subset-minimal entry; every step strictly shrinks.
    AttrSet m = entries[pos];
    for (bool shrunk = true; shrunk;) {
      shrunk = false;
      for (const auto& other : entries) {
        if (!other.empty() && other.is_proper_subset_of(m)) {
          m = other;
          shrunk = true;
          break;
        }
      }
    }
    step.absorbed = m;

    std::vector<AttrSet> remaining;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (!resolved[i] && !entries[i].empty()) remaining.push_back(entries[i]);
    }
    const AttrId a = select_attribute(m, remaining, policy);
    step.chosen = a;
    step.remainder = m - AttrSet{a};

    entries[pos] = AttrSet{a};
    resolved[pos] = true;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (i == pos || entries[i].empty()) continue;
      if (entries[i].contains(a)) {
        entries[i] = AttrSet{a};
        resolved[i] = true;
      } else {
        entries[i] -= step.remainder;
        if (entries[i].empty()) throw InvariantViolation("row-wise simplification emptied an entry");
      }
    }
    step.entries_after = entries;
    out.trace.steps.push_back(std::move(step));
  }

  for (const auto& e : entries) {
    if (e.size() != 1) throw InvariantViolation("row-wise simplification left a non-singleton entry");
    out.reduct |= e;
  }
  return out;
}

AttrSet red_of_family(const SetFamily& f, SelectionPolicy policy) { return yao_row_wise(f, policy).reduct; }

namespace {

SetFamily subtract_from_all(const SetFamily& f, const AttrSet& removed) {
  std::vector<AttrSet> sets;
  sets.reserve(f.size());
  for (const auto& s : f) sets.push_back(s - removed);
  return SetFamily(f.universe_size(), std::move(sets));
}

std::optional<AttrSet> first_missed(const SetFamily& n, const AttrSet& red) {
  for (const auto& k : n) {
    if (!red.intersects(k)) return k;
  }
  return std::nullopt;
}

AttrSet minimize_against(const SetFamily& f, AttrSet r, std::vector<AttrId>& removed) {
  const auto members = r.members();
  for (auto it = members.rbegin(); it != members.rend(); ++it) {
    const AttrId a = *it;
    if (hits_all(r - AttrSet{a}, f)) {
      r.erase(a);
      removed.push_back(a);
    }
  }
  return r;
}

}  // namespace

EaResult ea_reduce(const SetFamily& f, SelectionPolicy policy, bool minimize) {
  EaResult out;
  auto& trace = out.trace;
  SetFamily current = f;
  AttrSet r;
  while (!current.empty()) {
    EaStep step;
    step.chosen = select_attribute(current[0], current.sets(), policy);
    step.n = n_of(current, step.chosen);
    step.e = e_of(current, step.chosen);
    step.red = red_of_family(step.e, policy);
    r |= step.red;
    step.missed_by_red = first_missed(step.n, step.red);
    if (step.missed_by_red) {
      r.insert(step.chosen);
      step.a_added = true;
    }
    step.family_after = subtract_from_all(current, step.n.union_all());
    current = step.family_after;
    trace.iterations.push_back(std::move(step));
  }
  trace.unminimized = r;
  trace.minimized = minimize;
  trace.result = minimize ? minimize_against(f, r, trace.removed) : r;
  out.reduct = trace.result;
  return out;
}

std::optional<std::string> replay_ea_trace(const SetFamily& f, const ReductTrace& trace, SelectionPolicy policy) {
  SetFamily current = f;
  AttrSet r;
  for (std::size_t i = 0; i < trace.iterations.size(); ++i) {
    const auto& step = trace.iterations[i];
    const auto where = "iteration " + std::to_string(i + 1) + ": ";
    if (current.empty()) return where + "family already empty";
    if (select_attribute(current[0], current.sets(), policy) != step.chosen) return where + "different choice";
    if (n_of(current, step.chosen) != step.n) return where + "N differs";
    if (e_of(current, step.chosen) != step.e) return where + "E differs";
    if (red_of_family(step.e, policy) != step.red) return where + "RED differs";
    if (first_missed(step.n, step.red) != step.missed_by_red) return where + "missed member differs";
    if (step.a_added != step.missed_by_red.has_value()) return where + "a_added inconsistent";
    r |= step.red;
    if (step.a_added) r.insert(step.chosen);
    current = subtract_from_all(current, step.n.union_all());
    if (current != step.family_after) return where + "family after subtraction differs";
  }
  if (!current.empty()) return "trace ends before the family is exhausted";
  if (r != trace.unminimized) return "accumulated set differs from the recorded one";
  std::vector<AttrId> removed;
  const auto result = trace.minimized ? minimize_against(f, r, removed) : r;
  if (result != trace.result || removed != trace.removed) return "minimizing pass differs";
  return std::nullopt;
}

ReductDiagnosis verify_reduct(const SetFamily& f, const AttrSet& b) {
  ReductDiagnosis out;
  for (const auto& d : f) {
    if (!b.intersects(d)) {
      out.kind = ReductDiagnosis::Kind::NotHitting;
      out.missed = d;
      return out;
    }
  }
  auto members = b.members();
  for (auto it = members.rbegin(); it != members.rend(); ++it) {
    if (hits_all(b - AttrSet{*it}, f)) {
      out.kind = ReductDiagnosis::Kind::NotMinimal;
      out.removable = *it;
      return out;
    }
  }
  return out;
}

}  // namespace roughset
