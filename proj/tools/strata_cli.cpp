#include <iostream>

#include <CLI11.hpp>

#include "strata/io/report.hpp"

#ifndef STRATA_DATA_DIR
#define STRATA_DATA_DIR "data"
#endif

int main(int argc, char** argv) {
  using namespace strata::io;
  CLI::App app{"Ext groups, stratifications and Chevalley-Eilenberg cohomology over exact fields"};
  app.require_subcommand(1);

  std::vector<std::string> data{STRATA_DATA_DIR};
  std::vector<std::string> files;
  bool as_json = false;
  ReportOptions opt;
  std::size_t max_degree = 0;

  app.add_option("--data", data, "Definition directories or files (default: bundled corpus)");
  app.add_option("--file", files, "Additional definition files");
  app.add_flag("--json", as_json, "Structured output");

  for (const auto& name : report_commands()) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("args", opt.args, "Positional arguments");
    sub->add_option("--max-degree", max_degree, "Truncation degree (default 2 dim A)");
    sub->add_option("--order", opt.order, "Order: name, 'antichain', or x<y,...");
    sub->add_option("--segment", opt.segment, "Initial segment: name or labels");
    sub->add_option("--exhaustive-bound", opt.exhaustive_bound, "Dimension bound for exhaustive search");
    sub->add_option("--samples", opt.samples, "Random samples for lie-cup");
    sub->add_flag("--json", as_json, "Structured output");
    sub->fallthrough();
  }

  CLI11_PARSE(app, argc, argv);
  const std::string command = app.get_subcommands().front()->get_name();
  if (app.get_subcommands().front()->count("--max-degree")) opt.max_degree = max_degree;
  apply_seed_environment(opt);

  std::vector<std::string> paths = data;
  paths.insert(paths.end(), files.begin(), files.end());
  Workspace ws;
  try {
    ws = load_definitions(paths);
  } catch (const LoadError& e) {
    if (as_json) {
      json issues = json::array();
      for (const auto& i : e.issues())
        issues.push_back({{"file", i.file}, {"location", i.location}, {"message", i.message}});
      std::cout << json{{"error", {{"kind", "load"}, {"issues", issues}}}}.dump(2) << "\n";
    } else {
      for (const auto& i : e.issues()) std::cerr << "load error: " << i.to_string() << "\n";
    }
    return input_error;
  }

  Report r = run_report(ws, command, opt);
  if (as_json)
    std::cout << r.body.dump(2) << "\n";
  else
    (r.exit_code == input_error ? std::cerr : std::cout) << r.text;
  return r.exit_code;
}
