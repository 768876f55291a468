#include "defreg/cli.hpp"
#include "defreg/errors.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  using namespace defreg::cli;

  CLI::App app{"Upper bounds for the regularity of graded deficiency modules"};
  RunConfig config;
  std::string mode;
  std::string edges_path;
  std::string poset_path;
  std::string field = "rational";
  bool json = false;
  std::size_t only_j = 0;

  app.add_option("--mode", mode, "Input class")
      ->required()
      ->check(CLI::IsMember({"monomial", "graph", "poset"}));
  app.add_option("--vars", config.vars, "Comma-separated variable names (monomial mode)");
  app.add_option("--gens", config.gens, "Comma-separated squarefree generators, e.g. \"x*z,y*w\"");
  app.add_option("--edges", edges_path, "Edge-list file (graph mode)");
  app.add_option("--poset", poset_path, "Poset document (poset mode)");
  app.add_option("--field", field, "Coefficient field: rational or gf:P");
  app.add_flag("--json", json, "Structured JSON output");
  app.add_flag("--filtration", config.filtration, "Report filtration layers");
  app.add_flag("--witnesses", config.witnesses, "Report non-vanishing witnesses");
  app.add_flag("--check", config.check, "Report hypothesis checks");
  app.add_flag("--hasse", config.hasse, "Print the Hasse diagram");
  app.add_flag("--strict", config.strict, "Exit with status 3 when bounds are not certified");
  app.add_option("--max-poset", config.max_poset, "Poset element budget")->check(CLI::PositiveNumber);
  app.add_option("--max-faces", config.max_faces, "Order-complex face budget")->check(CLI::PositiveNumber);
  auto* j_opt = app.add_option("--j", only_j, "Analyze a single index j");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kParseError;
  }

  try {
    config.field = parse_field(field);
  } catch (const defreg::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParseError;
  }
  config.format = json ? OutputFormat::Json : OutputFormat::Text;
  if (j_opt->count() > 0)
    config.only_j = only_j;

  if (mode == "monomial") {
    config.mode = Mode::Monomial;
    if (config.vars.empty() || config.gens.empty()) {
      std::cerr << "error: monomial mode needs --vars and --gens\n";
      return kParseError;
    }
  } else if (mode == "graph") {
    config.mode = Mode::Graph;
    if (edges_path.empty()) {
      std::cerr << "error: graph mode needs --edges FILE\n";
      return kParseError;
    }
    config.input = {InputSource::Kind::File, edges_path};
  } else {
    config.mode = Mode::Poset;
    if (poset_path.empty()) {
      std::cerr << "error: poset mode needs --poset FILE\n";
      return kParseError;
    }
    config.input = {InputSource::Kind::File, poset_path};
  }

  const RunResult result = run(config);
  std::cout << result.output;
  if (!result.error.empty())
    std::cerr << "error: " << result.error << '\n';
  return result.exit_code;
}
