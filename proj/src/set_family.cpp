#include "roughset/set_family.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"
#include "roughset/errors.hpp"

namespace roughset {

SetFamily::SetFamily(std::size_t universe_size, std::vector<AttrSet> sets) : universe_size_(universe_size) {
  for (auto& s : sets) {
    if (s.bound() > universe_size_) {
      throw InputError("set mentions attribute " + std::to_string(s.bound() - 1) + " outside a universe of " +
                       std::to_string(universe_size_));
    }
  }
  std::erase_if(sets, [](const AttrSet& s) { return s.empty(); });
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  sets_ = std::move(sets);
}

bool SetFamily::contains(const AttrSet& s) const { return std::binary_search(sets_.begin(), sets_.end(), s); }

AttrSet SetFamily::union_all() const {
  AttrSet out;
  for (const auto& s : sets_) out |= s;
  return out;
}

SetFamily family_difference(const SetFamily& a, const SetFamily& b) {
  return a.filter([&](const AttrSet& s) { return !b.contains(s); });
}

NamedFamily load_family_json(const std::string& text, const std::string& source) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(source + ": invalid JSON: " + e.what());
  }
  if (!doc.is_array()) throw InputError(source + ": family must be a JSON array of arrays of strings");

  std::set<std::string> distinct;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    if (!doc[i].is_array()) {
      throw InputError(source + ": element " + std::to_string(i) + " is not an array");
    }
    for (std::size_t j = 0; j < doc[i].size(); ++j) {
      if (!doc[i][j].is_string()) {
        throw InputError(source + ": element " + std::to_string(i) + "[" + std::to_string(j) + "] is not a string");
      }
      distinct.insert(doc[i][j].get<std::string>());
    }
  }
  NamedFamily out;
  out.names.assign(distinct.begin(), distinct.end());
  std::vector<AttrSet> sets;
  for (const auto& member : doc) {
    sets.push_back(attr_set_from_names(out.names, member.get<std::vector<std::string>>()));
  }
  out.family = SetFamily(out.names.size(), std::move(sets));
  return out;
}

AttrSet attr_set_from_names(const std::vector<std::string>& names, const std::vector<std::string>& members) {
  AttrSet s;
  for (const auto& m : members) {
    auto it = std::find(names.begin(), names.end(), m);
    if (it == names.end()) throw InputError("unknown attribute '" + m + "'");
    s.insert(static_cast<AttrId>(it - names.begin()));
  }
  return s;
}

std::vector<std::string> sorted_names(const AttrSet& s, const std::vector<std::string>& names) {
  std::vector<std::string> out;
  s.for_each([&](AttrId a) { out.push_back(a < names.size() ? names[a] : "#" + std::to_string(a)); });
  std::sort(out.begin(), out.end());
  return out;
}

std::string format_set(const AttrSet& s, const std::vector<std::string>& names) {
  std::string out = "{";
  bool first = true;
  for (const auto& n : sorted_names(s, names)) {
    if (!first) out += ", ";
    out += n;
    first = false;
  }
  return out + "}";
}

std::string format_family(const SetFamily& f, const std::vector<std::string>& names) {
  std::string out = "{";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i != 0) out += ", ";
    out += format_set(f[i], names);
  }
  return out + "}";
}

}  // namespace roughset
