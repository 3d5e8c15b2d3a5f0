#include "hcyc/scenario/scenario.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace hcyc;

int main(int argc, char** argv) {
  CLI::App app{"hcyc: Hopf-cyclic scenario runner"};
  app.require_subcommand(1);
  std::string path, field, format = "json";
  std::optional<int> max_degree;
  bool parallel = false, pretty = false, timing = false;
  for (const char* verb : {"validate", "homology", "measure", "induced", "report"}) {
    CLI::App* sub = app.add_subcommand(verb);
    sub->add_option("scenario", path, "scenario JSON file")->required();
    sub->add_option("--max-degree", max_degree, "top homological degree");
    sub->add_option("--field", field, "override the scenario field (Q, F5, ...)");
    sub->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    sub->add_flag("--parallel", parallel, "run tasks concurrently");
    sub->add_flag("--pretty", pretty, "indent JSON output");
    sub->add_flag("--timing", timing, "per-task wall time");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  std::string verb = app.get_subcommands().front()->get_name();

  scenario::ScenarioDocument doc;
  try {
    scenario::ParseOptions po;
    if (!field.empty()) po.field = FieldSpec::parse(field);
    doc = scenario::parse_scenario_file(path, po);
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  }
  scenario::RunOptions ro;
  ro.kinds = scenario::kinds_for_verb(verb);
  ro.max_degree = max_degree;
  ro.parallel = parallel;
  ro.timing = timing;
  scenario::ReportDocument rep = scenario::run(doc, ro);
  std::cout << scenario::emit(rep, format == "json" ? scenario::Format::Json : scenario::Format::Text, pretty);
  if (format == "json" && !pretty) std::cout << "\n";
  return rep.failed() ? 1 : 0;
}
