#include "roughset/information_system.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include "roughset/errors.hpp"

namespace roughset {

InformationSystem::InformationSystem(std::vector<std::string> attribute_names,
                                     const std::vector<std::vector<std::string>>& rows,
                                     std::vector<std::string> object_labels)
    : names_(std::move(attribute_names)), labels_(std::move(object_labels)), object_count_(rows.size()) {
  if (names_.empty()) throw InputError("information system needs at least one attribute");
  if (rows.empty()) throw InputError("information system needs at least one object");
  std::set<std::string_view> seen;
  for (const auto& n : names_) {
    if (!seen.insert(n).second) throw InputError("duplicate attribute name '" + n + "'");
  }
  if (labels_.empty()) {
    for (std::size_t x = 0; x < rows.size(); ++x) labels_.push_back(std::to_string(x + 1));
  } else if (labels_.size() != rows.size()) {
    throw InputError("object label count does not match row count");
  }

  const auto width = names_.size();
  dictionaries_.resize(width);
  std::vector<std::unordered_map<std::string, std::uint32_t>> lookup(width);
  codes_.resize(rows.size() * width);
  for (std::size_t x = 0; x < rows.size(); ++x) {
    if (rows[x].size() != width) {
      throw InputError("row " + std::to_string(x + 1) + " has " + std::to_string(rows[x].size()) +
                       " values, expected " + std::to_string(width));
    }
    for (std::size_t a = 0; a < width; ++a) {
      auto [it, inserted] = lookup[a].try_emplace(rows[x][a], static_cast<std::uint32_t>(dictionaries_[a].size()));
      if (inserted) dictionaries_[a].push_back(rows[x][a]);
      codes_[x * width + a] = it->second;
    }
  }
}

InformationSystem InformationSystem::from_partitions(std::vector<std::string> attribute_names,
                                                     std::size_t object_count,
                                                     const std::vector<std::vector<std::vector<ObjectId>>>& partitions) {
  if (partitions.size() != attribute_names.size()) {
    throw InputError("one partition per attribute is required");
  }
  std::vector<std::vector<std::string>> rows(object_count, std::vector<std::string>(attribute_names.size()));
  for (std::size_t a = 0; a < partitions.size(); ++a) {
    std::vector<bool> placed(object_count, false);
    for (std::size_t b = 0; b < partitions[a].size(); ++b) {
      for (auto x : partitions[a][b]) {
        if (x >= object_count || placed[x]) {
          throw InputError("partition of '" + attribute_names[a] + "' is not a partition of the objects");
        }
        placed[x] = true;
        rows[x][a] = "v" + std::to_string(b);
      }
    }
    if (std::find(placed.begin(), placed.end(), false) != placed.end()) {
      throw InputError("partition of '" + attribute_names[a] + "' misses an object");
    }
  }
  return InformationSystem(std::move(attribute_names), rows);
}

std::optional<AttrId> InformationSystem::find_attribute(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<AttrId>(it - names_.begin());
}

void InformationSystem::check_attributes(const AttrSet& b) const {
  if (b.bound() > names_.size()) {
    throw InputError("unknown attribute id " + std::to_string(b.bound() - 1) + " (system has " +
                     std::to_string(names_.size()) + " attributes)");
  }
}

std::vector<CsvRecord> parse_csv(std::string_view text, const std::string& source) {
  std::vector<CsvRecord> records;
  CsvRecord current;
  std::string field;
  bool in_quotes = false;
  bool field_started = false;
  bool quote_closed = false;
  bool record_has_content = false;
  std::size_t line = 1;
  std::size_t quote_line = 0;
  current.line = 1;

  auto end_field = [&] {
    current.fields.push_back(std::move(field));
    field.clear();
    field_started = false;
    quote_closed = false;
  };
  auto end_record = [&] {
    end_field();
    if (record_has_content) records.push_back(std::move(current));
    record_has_content = false;
    current = CsvRecord{};
    current.line = line;
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c != '\r' && c != '\n') record_has_content = true;
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          in_quotes = false;
          quote_closed = true;
        }
      } else {
        if (c == '\n') ++line;
        field.push_back(c);
      }
      continue;
    }
    if (quote_closed && c != ',' && c != '\r' && c != '\n') {
      throw InputError(source + ":" + std::to_string(line) + ":" + std::to_string(current.fields.size() + 1) +
                       ": text after closing quote");
    }
    switch (c) {
      case '"':
        if (field_started) {
          throw InputError(source + ":" + std::to_string(line) + ":" + std::to_string(current.fields.size() + 1) +
                           ": stray quote inside unquoted field");
        }
        in_quotes = true;
        field_started = true;
        quote_line = line;
        break;
      case ',':
        end_field();
        break;
      case '\r':
        break;
      case '\n':
        ++line;
        end_record();
        break;
      default:
        field.push_back(c);
        field_started = true;
    }
  }
  if (in_quotes) {
    throw InputError(source + ":" + std::to_string(quote_line) + ": unterminated quoted field");
  }
  if (record_has_content) end_record();
  return records;
}

InformationSystem load_table(std::string_view text, const TableOptions& options) {
  auto records = parse_csv(text, options.source);
  if (records.empty()) throw InputError(options.source + ": empty table");

  const auto& header = records.front();
  const std::size_t skip = options.id_column ? 1 : 0;
  if (header.fields.size() <= skip) {
    throw InputError(options.source + ":" + std::to_string(header.line) + ": header has no attribute columns");
  }
  std::vector<std::string> names(header.fields.begin() + static_cast<std::ptrdiff_t>(skip), header.fields.end());
  std::map<std::string_view, std::size_t> first_column;
  for (std::size_t c = 0; c < names.size(); ++c) {
    auto [it, inserted] = first_column.emplace(names[c], c);
    if (!inserted) {
      throw InputError(options.source + ":" + std::to_string(header.line) + ":" + std::to_string(c + 1 + skip) +
                       ": duplicate attribute name '" + names[c] + "' (first seen in column " +
                       std::to_string(it->second + 1 + skip) + ")");
    }
  }
  if (records.size() == 1) throw InputError(options.source + ": table has a header but no rows");

  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> labels;
  for (std::size_t r = 1; r < records.size(); ++r) {
    auto& rec = records[r];
    if (rec.fields.size() != header.fields.size()) {
      throw InputError(options.source + ":" + std::to_string(rec.line) + ":" +
                       std::to_string(std::min(rec.fields.size(), header.fields.size()) + 1) + ": row " +
                       std::to_string(r) + " has " + std::to_string(rec.fields.size()) + " fields, expected " +
                       std::to_string(header.fields.size()));
    }
    if (options.id_column) labels.push_back(rec.fields.front());
    rows.emplace_back(rec.fields.begin() + static_cast<std::ptrdiff_t>(skip), rec.fields.end());
  }
  return InformationSystem(std::move(names), rows, std::move(labels));
}

}  // namespace roughset
