#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "roughset/discernibility.hpp"
#include "roughset/reducers.hpp"
#include "roughset/relations.hpp"

namespace roughset::cli {

enum class InputKind { CsvTable, JsonFamily };
enum class Command { Matrix, Classify, Reduct, AllReducts, Relations, Audit, Covering };
enum class Algorithm { Ea, Yao };
enum class OutputFormat { Text, Json };

struct RunConfig {
  std::string input_path;
  // Read instead of the file when set; input_path is then only a label.
  std::optional<std::string> input_text;
  // Inferred from the extension (.json means a family) when unset.
  std::optional<InputKind> input_kind;
  Command command = Command::Classify;
  Algorithm algorithm = Algorithm::Ea;
  SelectionPolicy policy = SelectionPolicy::First;
  bool minimize = true;
  bool verbose = false;
  std::size_t oracle_cap = kDefaultOracleCap;
  std::size_t audit_cap = kDefaultAuditCap;
  OutputFormat format = OutputFormat::Text;
  bool id_column = false;
  // "C->a" with C a comma-separated list of names, possibly empty.
  std::vector<std::string> excludes;
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int input = 1;
inline constexpr int invariant = 2;
inline constexpr int resource = 3;
}  // namespace exit_code

std::string_view to_string(Command c);
std::optional<Command> parse_command(std::string_view name);

// Runs one subcommand. The report goes to `out` only on success; error
// messages go to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace roughset::cli
