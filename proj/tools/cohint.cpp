#include "cohint/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

int main(int argc, char** argv) {
  CLI::App app{"Strata, BPS spaces and integrality checks for weakly symmetric representations"};
  app.require_subcommand(1, 1);

  std::string input_path, catalog_key, format = "json";
  int max_degree = -1, orbit = -1;
  std::size_t group_cap = 0;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input", input_path, "input document (JSON)");
    sub->add_option("--catalog", catalog_key, "catalog key, e.g. gl2-cotangent or sl2-irrep:5");
    sub->add_option("--max-degree", max_degree, "largest polynomial degree to verify")->check(CLI::NonNegativeNumber);
    sub->add_option("--group-cap", group_cap, "largest Weyl group order accepted")->check(CLI::PositiveNumber);
    sub->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--orbit", orbit, "restrict bps output to one orbit")->check(CLI::NonNegativeNumber);
  };
  for (const char* name : {"validate", "strata", "bps", "verify", "molien", "catalog"})
    add_common(app.add_subcommand(name));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cohint::kExitInvalid;
  }

  cohint::RunOptions options;
  options.command = app.get_subcommands().front()->get_name();
  if (!input_path.empty()) {
    std::ifstream in(input_path);
    if (!in) {
      std::cerr << "cannot read " << input_path << "\n";
      return cohint::kExitInvalid;
    }
    std::ostringstream text;
    text << in.rdbuf();
    options.input_text = text.str();
  }
  if (!catalog_key.empty()) options.catalog_key = catalog_key;
  if (max_degree >= 0) options.max_degree = max_degree;
  if (group_cap > 0) options.group_cap = group_cap;
  if (orbit >= 0) options.orbit = orbit;

  const cohint::RunResult result = cohint::run(options);
  if (format == "text") {
    std::cout << cohint::render_text(result.report);
  } else {
    std::cout << result.report.dump(2) << "\n";
  }
  return result.exit_code;
}
