#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "roughset/index_set.hpp"

namespace roughset {

/// Complete categorical table: every object has a value for every attribute.
///
/// Values are opaque tokens. They are interned per column and only ever
/// compared for equality; no ordering or numeric meaning is attached.
class InformationSystem {
 public:
  /// `rows[x][a]` is the value of attribute `a` on object `x`. Object labels
  /// default to "1".."n" when `object_labels` is empty.
  InformationSystem(std::vector<std::string> attribute_names, const std::vector<std::vector<std::string>>& rows,
                    std::vector<std::string> object_labels = {});

  /// Builds a system whose single-attribute partitions are the given ones.
  /// `partitions[a]` lists blocks of 0-based object ids for attribute `a`.
  static InformationSystem from_partitions(std::vector<std::string> attribute_names, std::size_t object_count,
                                           const std::vector<std::vector<std::vector<ObjectId>>>& partitions);

  std::size_t object_count() const { return object_count_; }
  std::size_t attribute_count() const { return names_.size(); }

  const std::vector<std::string>& attribute_names() const { return names_; }
  const std::string& attribute_name(AttrId a) const { return names_.at(a); }
  std::optional<AttrId> find_attribute(std::string_view name) const;

  const std::string& object_label(ObjectId x) const { return labels_.at(x); }

  const std::string& value(ObjectId x, AttrId a) const { return dictionaries_[a][code(x, a)]; }

  /// Interned value: equal codes iff equal values within one column.
  std::uint32_t code(ObjectId x, AttrId a) const { return codes_[x * names_.size() + a]; }

  AttrSet all_attributes() const { return AttrSet::range(names_.size()); }
  ObjSet all_objects() const { return ObjSet::range(object_count_); }

  /// Throws InputError naming the first attribute outside the universe.
  void check_attributes(const AttrSet& b) const;

 private:
  std::vector<std::string> names_;
  std::vector<std::string> labels_;
  std::vector<std::vector<std::string>> dictionaries_;
  std::vector<std::uint32_t> codes_;
  std::size_t object_count_ = 0;
};

struct TableOptions {
  /// First column holds object labels, not an attribute.
  bool id_column = false;
  /// Used in error messages.
  std::string source = "<input>";
};

/// Parses a comma-separated table with a header row of attribute names.
/// Fields may be double-quoted; `""` inside quotes is a literal quote.
/// Errors carry `source:row:column`.
InformationSystem load_table(std::string_view text, const TableOptions& options = {});

struct CsvRecord {
  std::size_t line = 0;  // 1-based line where the record starts
  std::vector<std::string> fields;
};

/// Splits CSV text into records, skipping blank lines.
std::vector<CsvRecord> parse_csv(std::string_view text, const std::string& source = "<input>");

}  // namespace roughset
