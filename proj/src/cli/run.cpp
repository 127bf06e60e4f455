#include "roughset/cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "roughset/characterization.hpp"
#include "roughset/covering.hpp"
#include "roughset/errors.hpp"
#include "roughset/information_system.hpp"

namespace roughset::cli {

namespace {

using nlohmann::json;

struct Loaded {
  std::optional<InformationSystem> table;
  std::vector<std::string> names;
  SetFamily family;
  std::optional<DiscernibilityMatrix> matrix;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw InputError(path + ": read failed");
  return buf.str();
}

bool ends_with_json(const std::string& path) {
  constexpr std::string_view ext = ".json";
  if (path.size() < ext.size()) return false;
  return std::equal(ext.rbegin(), ext.rend(), path.rbegin(),
                    [](char a, char b) { return a == std::tolower(static_cast<unsigned char>(b)); });
}

Loaded load(const RunConfig& config, std::vector<std::string>& warnings) {
  const std::string source = config.input_path.empty() ? "<input>" : config.input_path;
  const std::string text = config.input_text ? *config.input_text : read_file(config.input_path);
  const InputKind kind =
      config.input_kind.value_or(ends_with_json(config.input_path) ? InputKind::JsonFamily : InputKind::CsvTable);

  Loaded out;
  if (kind == InputKind::JsonFamily) {
    if (config.id_column) warnings.push_back("--id-col has no effect on a family input");
    auto nf = load_family_json(text, source);
    out.names = std::move(nf.names);
    out.family = std::move(nf.family);
    return out;
  }
  TableOptions options;
  options.id_column = config.id_column;
  options.source = source;
  out.table.emplace(load_table(text, options));
  out.names = out.table->attribute_names();
  out.matrix.emplace(discernibility_matrix(*out.table));
  out.family = family(*out.matrix);
  return out;
}

json set_json(const AttrSet& s, const std::vector<std::string>& names) { return sorted_names(s, names); }

json family_json(const SetFamily& f, const std::vector<std::string>& names) {
  json arr = json::array();
  for (const auto& s : f) arr.push_back(set_json(s, names));
  return arr;
}

json sets_json(const std::vector<AttrSet>& sets, const std::vector<std::string>& names) {
  json arr = json::array();
  for (const auto& s : sets) arr.push_back(set_json(s, names));
  return arr;
}

std::string format_sets(const std::vector<AttrSet>& sets, const std::vector<std::string>& names) {
  std::string s = "{";
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (i != 0) s += ", ";
    s += format_set(sets[i], names);
  }
  return s + "}";
}

void cap_warning(std::size_t cap, std::size_t def, const char* what, std::vector<std::string>& warnings) {
  if (cap == 0) throw InputError(std::string(what) + " cap must be at least 1");
  if (cap > def) {
    warnings.push_back(std::string(what) + " cap raised to " + std::to_string(cap) + " (default " +
                       std::to_string(def) + "); exhaustive enumeration may be slow");
  }
}

AttrId attribute_by_name(const std::vector<std::string>& names, const std::string& name) {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw InputError("unknown attribute '" + name + "'");
  return static_cast<AttrId>(it - names.begin());
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

std::pair<AttrSet, AttrId> parse_exclusion(const std::string& query, const std::vector<std::string>& names) {
  auto arrow = query.find("->");
  if (arrow == std::string::npos) throw InputError("--excludes '" + query + "': expected \"C->a\"");
  const auto lhs = std::string_view(query).substr(0, arrow);
  const auto rhs = trim(std::string_view(query).substr(arrow + 2));
  if (rhs.empty()) throw InputError("--excludes '" + query + "': missing attribute after ->");
  AttrSet c;
  std::size_t start = 0;
  while (start <= lhs.size()) {
    auto comma = lhs.find(',', start);
    if (comma == std::string_view::npos) comma = lhs.size();
    auto item = trim(lhs.substr(start, comma - start));
    if (!item.empty()) {
      c.insert(attribute_by_name(names, item));
    } else if (comma != lhs.size() || start != 0) {
      throw InputError("--excludes '" + query + "': empty attribute name");
    }
    start = comma + 1;
  }
  return {c, attribute_by_name(names, rhs)};
}

// ----- subcommands -----

struct Report {
  json result = json::object();
  std::string text;
};

Report do_matrix(const Loaded& in, std::vector<std::string>& warnings) {
  Report r;
  if (!in.matrix) {
    warnings.push_back("family input has no object pairs; printing the family");
    r.result["family"] = family_json(in.family, in.names);
    r.text = "family: " + format_family(in.family, in.names) + "\n";
    return r;
  }
  const auto& m = *in.matrix;
  const auto& is = *in.table;
  const std::size_t n = m.object_count();

  json labels = json::array();
  for (ObjectId x = 0; x < n; ++x) labels.push_back(is.object_label(x));
  json entries = json::array();
  for (ObjectId x = 0; x < n; ++x) {
    for (ObjectId y = x + 1; y < n; ++y) {
      entries.push_back({{"x", is.object_label(x)}, {"y", is.object_label(y)}, {"set", set_json(m.entry(x, y), in.names)}});
    }
  }
  r.result["objects"] = labels;
  r.result["entries"] = entries;
  r.result["family"] = family_json(in.family, in.names);

  // Cells are upper triangular; the diagonal and below print blank.
  std::size_t width = 1;
  for (ObjectId x = 0; x < n; ++x) width = std::max(width, is.object_label(x).size());
  std::vector<std::vector<std::string>> cells(n, std::vector<std::string>(n));
  for (ObjectId x = 0; x < n; ++x) {
    for (ObjectId y = x + 1; y < n; ++y) {
      cells[x][y] = format_set(m.entry(x, y), in.names);
      width = std::max(width, cells[x][y].size());
    }
  }
  std::ostringstream os;
  os << std::left << std::setw(static_cast<int>(width)) << "";
  for (ObjectId y = 0; y < n; ++y) os << "  " << std::setw(static_cast<int>(width)) << is.object_label(y);
  os << "\n";
  for (ObjectId x = 0; x < n; ++x) {
    os << std::setw(static_cast<int>(width)) << is.object_label(x);
    for (ObjectId y = 0; y < n; ++y) os << "  " << std::setw(static_cast<int>(width)) << cells[x][y];
    os << "\n";
  }
  os << "family: " << format_family(in.family, in.names) << "\n";
  r.text = os.str();
  return r;
}

Report do_classify(const Loaded& in) {
  Report r;
  const auto report = classify_all(in.family);
  json characters = json::object();
  json n_json = json::object();
  json e_json = json::object();
  std::ostringstream os;
  for (AttrId a = 0; a < in.names.size(); ++a) {
    const auto& name = in.names[a];
    const auto n = n_of(in.family, a);
    const auto e = e_of(in.family, a);
    characters[name] = std::string(to_string(report.of(a)));
    n_json[name] = family_json(n, in.names);
    e_json[name] = family_json(e, in.names);
    os << name << ": " << to_string(report.of(a)) << "\n";
    os << "  N(" << name << ") = " << format_family(n, in.names) << "\n";
    os << "  E(" << name << ") = " << format_family(e, in.names) << "\n";
  }
  r.result["characters"] = characters;
  r.result["n"] = n_json;
  r.result["e"] = e_json;
  for (auto c : {Character::Core, Character::RelativeNecessary, Character::Unnecessary}) {
    const auto members = report.with(c);
    r.result[std::string(to_string(c))] = set_json(members, in.names);
    os << to_string(c) << ": " << format_set(members, in.names) << "\n";
  }
  r.text = os.str();
  return r;
}

json ea_trace_json(const ReductTrace& t, const std::vector<std::string>& names) {
  json its = json::array();
  for (const auto& s : t.iterations) {
    its.push_back({{"chosen", names[s.chosen]},
                   {"n", family_json(s.n, names)},
                   {"e", family_json(s.e, names)},
                   {"red", set_json(s.red, names)},
                   {"a_added", s.a_added},
                   {"missed_by_red", s.missed_by_red ? set_json(*s.missed_by_red, names) : json(nullptr)},
                   {"family_after", family_json(s.family_after, names)}});
  }
  json removed = json::array();
  for (auto a : t.removed) removed.push_back(names[a]);
  return {{"iterations", its}, {"unminimized", set_json(t.unminimized, names)}, {"removed", removed}};
}

std::string ea_trace_text(const ReductTrace& t, const std::vector<std::string>& names) {
  std::ostringstream os;
  for (std::size_t i = 0; i < t.iterations.size(); ++i) {
    const auto& s = t.iterations[i];
    os << "iteration " << i + 1 << ": a = " << names[s.chosen] << "\n";
    os << "  N = " << format_family(s.n, names) << "\n";
    os << "  E = " << format_family(s.e, names) << "\n";
    os << "  RED_E = " << format_set(s.red, names) << "\n";
    if (s.a_added) os << "  " << names[s.chosen] << " added, RED_E misses " << format_set(*s.missed_by_red, names) << "\n";
    os << "  remaining = " << format_family(s.family_after, names) << "\n";
  }
  os << "before minimizing: " << format_set(t.unminimized, names) << "\n";
  if (!t.removed.empty()) {
    os << "removed:";
    for (auto a : t.removed) os << " " << names[a];
    os << "\n";
  }
  return os.str();
}

json yao_trace_json(const YaoTrace& t, const std::vector<std::string>& names) {
  json steps = json::array();
  for (const auto& s : t.steps) {
    steps.push_back({{"entry", s.entry},
                     {"visited", set_json(s.visited, names)},
                     {"absorbed", set_json(s.absorbed, names)},
                     {"chosen", names[s.chosen]},
                     {"remainder", set_json(s.remainder, names)},
                     {"entries_after", sets_json(s.entries_after, names)}});
  }
  return {{"initial", sets_json(t.initial, names)}, {"steps", steps}};
}

std::string yao_trace_text(const YaoTrace& t, const std::vector<std::string>& names) {
  std::ostringstream os;
  os << "entries: " << format_sets(t.initial, names) << "\n";
  for (const auto& s : t.steps) {
    os << "entry " << s.entry << " " << format_set(s.visited, names) << " -> " << format_set(s.absorbed, names)
       << ", pick " << names[s.chosen] << ", drop " << format_set(s.remainder, names) << "\n";
    os << "  " << format_sets(s.entries_after, names) << "\n";
  }
  return os.str();
}

Report do_reduct(const Loaded& in, const RunConfig& config, std::vector<std::string>& warnings) {
  Report r;
  AttrSet reduct;
  json trace;
  std::string trace_text;
  if (config.algorithm == Algorithm::Ea) {
    auto res = ea_reduce(in.family, config.policy, config.minimize);
    if (auto mismatch = replay_ea_trace(in.family, res.trace, config.policy)) {
      throw InvariantViolation("trace does not replay: " + *mismatch);
    }
    reduct = res.reduct;
    trace = ea_trace_json(res.trace, in.names);
    trace_text = ea_trace_text(res.trace, in.names);
  } else {
    if (!config.minimize) warnings.push_back("--no-minimize has no effect with --algo yao");
    auto res = yao_row_wise(in.family, config.policy);
    reduct = res.reduct;
    trace = yao_trace_json(res.trace, in.names);
    trace_text = yao_trace_text(res.trace, in.names);
  }

  const auto diagnosis = verify_reduct(in.family, reduct);
  if (!diagnosis.valid()) {
    std::string why = diagnosis.kind == ReductDiagnosis::Kind::NotHitting
                          ? "misses " + format_set(*diagnosis.missed, in.names)
                          : in.names[*diagnosis.removable] + " is removable";
    throw InvariantViolation("computed set " + format_set(reduct, in.names) + " is not a reduct: " + why);
  }

  r.result["algorithm"] = config.algorithm == Algorithm::Ea ? "ea" : "yao";
  r.result["selection"] = std::string(to_string(config.policy));
  r.result["reduct"] = set_json(reduct, in.names);
  r.result["valid"] = true;
  if (config.algorithm == Algorithm::Ea) r.result["minimize"] = config.minimize;
  if (config.verbose) r.result["trace"] = trace;

  std::ostringstream os;
  if (config.verbose) os << trace_text;
  os << "reduct: " << format_set(reduct, in.names) << "\n";
  os << "verified: every member hit, no attribute removable\n";
  r.text = os.str();
  return r;
}

std::vector<AttrSet> reducts_of(const Loaded& in, const RunConfig& config) {
  return all_reducts_bruteforce(in.family, AttrSet::range(in.names.size()), config.oracle_cap);
}

Report do_all_reducts(const Loaded& in, const RunConfig& config) {
  Report r;
  const auto reducts = reducts_of(in, config);
  // Within the cap the brute-force list already succeeded, so the CNF route
  // is cheap enough to cross-check.
  auto implicants = discernibility_function_reducts(in.family, config.oracle_cap);
  std::sort(implicants.begin(), implicants.end());
  if (implicants != reducts) {
    throw InvariantViolation("prime implicants " + format_sets(implicants, in.names) + " differ from enumerated " +
                             format_sets(reducts, in.names));
  }
  r.result["reducts"] = sets_json(reducts, in.names);
  r.result["prime_implicants_agree"] = true;
  std::ostringstream os;
  for (const auto& b : reducts) os << format_set(b, in.names) << "\n";
  os << reducts.size() << " reduct" << (reducts.size() == 1 ? "" : "s") << ", prime implicants agree\n";
  r.text = os.str();
  return r;
}

json pairs_json(const std::vector<std::pair<AttrId, AttrId>>& pairs, const std::vector<std::string>& names) {
  json arr = json::array();
  for (auto [a, b] : pairs) arr.push_back(json::array({names[a], names[b]}));
  return arr;
}

Report do_relations(const Loaded& in, const RunConfig& config) {
  Report r;
  std::vector<std::pair<AttrSet, AttrId>> queries;
  for (const auto& q : config.excludes) queries.push_back(parse_exclusion(q, in.names));
  const auto reducts = reducts_of(in, config);
  const auto rep = in.table ? relation_report(*in.table, reducts, queries) : relation_report(in.family, reducts, queries);

  r.result["finer"] = pairs_json(rep.finer_pairs, in.names);
  r.result["equivalent"] = pairs_json(rep.equivalent_pairs, in.names);
  r.result["coupled"] = pairs_json(rep.coupled_pairs, in.names);
  json ex = json::array();
  for (const auto& q : rep.exclusions) {
    ex.push_back({{"c", set_json(q.c, in.names)}, {"a", in.names[q.a]}, {"holds", q.holds}});
  }
  r.result["excludes"] = ex;
  r.result["reducts"] = sets_json(reducts, in.names);

  std::ostringstream os;
  os << "reducts: " << format_sets(reducts, in.names) << "\n";
  os << "finer:";
  for (auto [a, b] : rep.finer_pairs) os << " " << in.names[a] << ">=" << in.names[b];
  os << "\nequivalent:";
  for (auto [a, b] : rep.equivalent_pairs) os << " " << in.names[a] << "~" << in.names[b];
  os << "\ncoupled:";
  for (auto [a, b] : rep.coupled_pairs) os << " " << in.names[a] << "," << in.names[b];
  os << "\n";
  for (const auto& q : rep.exclusions) {
    os << format_set(q.c, in.names) << " excludes " << in.names[q.a] << ": " << (q.holds ? "yes" : "no") << "\n";
  }
  r.text = os.str();
  return r;
}

Report do_audit(const Loaded& in, const RunConfig& config) {
  Report r;
  const std::string instance = config.input_path.empty() ? "input" : config.input_path;
  const auto rep = in.table ? audit_theorems(*in.table, config.audit_cap, instance)
                            : audit_family(in.family, in.names, config.audit_cap, instance);

  json claims = json::object();
  std::ostringstream os;
  for (const auto& claim : audited_claims()) {
    const auto all = rep.of(claim);
    if (all.empty()) continue;
    const auto bad = std::count_if(all.begin(), all.end(), [](const AuditEntry& e) { return !e.agree; });
    claims[claim] = {{"instances", all.size()}, {"disagreements", bad}};
    os << std::left << std::setw(22) << claim << all.size() << " checked, " << bad << " disagree\n";
  }
  json bad = json::array();
  for (const auto& e : rep.disagreements()) {
    bad.push_back({{"claim", e.claim},
                   {"subject", e.subject},
                   {"lhs", e.lhs},
                   {"rhs", e.rhs},
                   {"implication", e.implication},
                   {"witness", e.witness}});
    os << "counterexample " << e.claim << " at " << e.subject << ": lhs=" << e.lhs << " rhs=" << e.rhs;
    if (!e.witness.empty()) os << " witness " << e.witness;
    os << "\n";
  }
  for (const auto& n : rep.notes) os << "note: " << n << "\n";
  r.result["claims"] = claims;
  r.result["disagreements"] = bad;
  r.result["notes"] = rep.notes;
  r.text = os.str();
  return r;
}

Report do_covering(const Loaded& in) {
  Report r;
  const auto space = CoveringSpace::over_family(in.family);
  const auto uncovered = uncovered_attributes(in.family) & AttrSet::range(in.names.size());
  json elements = json::object();
  AttrSet all_true;
  std::ostringstream os;
  for (AttrId a = 0; a < in.names.size(); ++a) {
    if (!space.ground().contains(a)) continue;
    const auto md = space.minimal_description(a);
    const auto nb = space.neighborhood(a);
    const auto eq = space.singleton_equivalences(a);
    if (!eq.all_equal()) {
      throw InvariantViolation("singleton conditions disagree at " + in.names[a]);
    }
    if (eq.all_true()) all_true.insert(a);
    elements[in.names[a]] = {{"md", family_json(md, in.names)},
                             {"neighborhood", set_json(nb, in.names)},
                             {"singleton_in_cover", eq.singleton_in_cover},
                             {"md_is_singleton", eq.md_is_singleton},
                             {"lower_is_singleton", eq.lower_is_singleton},
                             {"md_is_lower", eq.md_is_lower}};
    os << in.names[a] << ": Md = " << format_family(md, in.names) << ", neighborhood = " << format_set(nb, in.names)
       << ", singleton conditions = " << (eq.all_true() ? "all true" : "all false") << "\n";
  }
  r.result["elements"] = elements;
  r.result["uncovered"] = set_json(uncovered, in.names);
  r.result["singleton"] = set_json(all_true, in.names);
  os << "singleton: " << format_set(all_true, in.names) << "\n";
  os << "uncovered: " << format_set(uncovered, in.names) << "\n";
  r.text = os.str();
  return r;
}

int fail(std::ostream& err, const std::string& kind, const std::string& what, int code) {
  err << "error (" << kind << "): " << what << "\n";
  return code;
}

}  // namespace

std::string_view to_string(Command c) {
  switch (c) {
    case Command::Matrix: return "matrix";
    case Command::Classify: return "classify";
    case Command::Reduct: return "reduct";
    case Command::AllReducts: return "all-reducts";
    case Command::Relations: return "relations";
    case Command::Audit: return "audit";
    case Command::Covering: return "covering";
  }
  return "?";
}

std::optional<Command> parse_command(std::string_view name) {
  for (auto c : {Command::Matrix, Command::Classify, Command::Reduct, Command::AllReducts, Command::Relations,
                 Command::Audit, Command::Covering}) {
    if (to_string(c) == name) return c;
  }
  return std::nullopt;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::vector<std::string> warnings;
  try {
    cap_warning(config.oracle_cap, kDefaultOracleCap, "oracle", warnings);
    cap_warning(config.audit_cap, kDefaultAuditCap, "audit", warnings);
    const auto in = load(config, warnings);

    Report rep;
    switch (config.command) {
      case Command::Matrix: rep = do_matrix(in, warnings); break;
      case Command::Classify: rep = do_classify(in); break;
      case Command::Reduct: rep = do_reduct(in, config, warnings); break;
      case Command::AllReducts: rep = do_all_reducts(in, config); break;
      case Command::Relations: rep = do_relations(in, config); break;
      case Command::Audit: rep = do_audit(in, config); break;
      case Command::Covering: rep = do_covering(in); break;
    }

    if (config.format == OutputFormat::Json) {
      json doc = {{"command", std::string(to_string(config.command))},
                  {"input", config.input_path},
                  {"attributes", in.names},
                  {"result", rep.result},
                  {"warnings", warnings}};
      out << doc.dump(2, ' ', false, json::error_handler_t::replace) << "\n";
    } else {
      for (const auto& w : warnings) err << "warning: " << w << "\n";
      out << rep.text;
    }
    return exit_code::ok;
  } catch (const InputError& e) {
    return fail(err, "input", e.what(), exit_code::input);
  } catch (const ResourceError& e) {
    return fail(err, "resource", e.what(), exit_code::resource);
  } catch (const InvariantViolation& e) {
    return fail(err, "internal", e.what(), exit_code::invariant);
  } catch (const std::exception& e) {
    return fail(err, "internal", e.what(), exit_code::invariant);
  }
}

}  // namespace roughset::cli
