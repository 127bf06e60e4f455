#include <iostream>

#include "CLI11.hpp"
#include "roughset/cli.hpp"

using namespace roughset;
using namespace roughset::cli;

int main(int argc, char** argv) {
  CLI::App app{"Attribute reduction over categorical tables"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig config;
  std::string format = "text";
  std::string kind;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--id-col", config.id_column, "First CSV column holds object labels");
  app.add_option("--input-kind", kind, "Override the kind inferred from the file extension")
      ->check(CLI::IsMember({"csv", "json"}));

  auto input = [&](CLI::App* sub) {
    sub->add_option("input", config.input_path, "CSV table or JSON family")->required();
  };

  auto* matrix = app.add_subcommand("matrix", "Pairwise discernibility matrix");
  input(matrix);
  auto* classify = app.add_subcommand("classify", "Core / relative necessary / unnecessary, with N(a) and E(a)");
  input(classify);

  auto* reduct = app.add_subcommand("reduct", "Construct one reduct");
  input(reduct);
  std::string algo = "ea";
  std::string select = "first";
  bool no_minimize = false;
  reduct->add_option("--algo", algo, "ea or yao")->check(CLI::IsMember({"ea", "yao"}));
  reduct->add_option("--select", select, "first or freq")->check(CLI::IsMember({"first", "freq"}));
  reduct->add_flag("--no-minimize", no_minimize, "Skip the final minimizing pass");
  reduct->add_flag("--verbose", config.verbose, "Print the trace");

  auto* all = app.add_subcommand("all-reducts", "Enumerate every reduct");
  input(all);
  all->add_option("--max-attrs", config.oracle_cap, "Attribute cap for enumeration")->check(CLI::PositiveNumber);

  auto* relations = app.add_subcommand("relations", "Finer, equivalent and coupled attribute pairs");
  input(relations);
  relations->add_option("--excludes", config.excludes, "Query \"C->a\", C comma-separated");
  relations->add_option("--max-attrs", config.oracle_cap, "Attribute cap for enumeration")->check(CLI::PositiveNumber);

  auto* audit = app.add_subcommand("audit", "Evaluate both sides of the characterization claims");
  input(audit);
  audit->add_option("--max-attrs", config.audit_cap, "Attribute cap for the audit")->check(CLI::PositiveNumber);

  auto* covering = app.add_subcommand("covering", "Minimal descriptions and neighborhoods of the family");
  input(covering);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_code::ok : exit_code::input;
  }

  config.command = *parse_command(app.get_subcommands().front()->get_name());
  config.format = format == "json" ? OutputFormat::Json : OutputFormat::Text;
  if (kind == "csv") config.input_kind = InputKind::CsvTable;
  if (kind == "json") config.input_kind = InputKind::JsonFamily;
  config.algorithm = algo == "yao" ? Algorithm::Yao : Algorithm::Ea;
  config.policy = select == "freq" ? SelectionPolicy::MaxFrequency : SelectionPolicy::First;
  config.minimize = !no_minimize;

  return run(config, std::cout, std::cerr);
}
