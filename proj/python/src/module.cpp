#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "strata/io/report.hpp"

namespace py = pybind11;
using namespace strata::io;

namespace {

py::tuple run(const std::vector<std::string>& paths, const std::string& command,
              const std::vector<std::string>& args, std::optional<std::size_t> max_degree,
              std::optional<std::string> order, std::optional<std::string> segment,
              std::size_t exhaustive_bound, std::size_t samples, std::optional<std::uint64_t> seed) {
  ReportOptions o;
  o.args = args;
  o.max_degree = max_degree;
  o.order = std::move(order);
  o.segment = std::move(segment);
  o.exhaustive_bound = exhaustive_bound;
  o.samples = samples;
  apply_seed_environment(o);
  if (seed) {
    o.seed = *seed;
    o.seed_source = "argument";
  }
  Report r;
  try {
    Workspace ws = load_definitions(paths);
    py::gil_scoped_release release;
    r = run_report(ws, command, o);
  } catch (const LoadError& e) {
    r.exit_code = input_error;
    json issues = json::array();
    for (const auto& i : e.issues()) issues.push_back(i.to_string());
    r.body = {{"error", {{"kind", "load"}, {"issues", issues}}}};
    r.text = e.what();
  }
  return py::make_tuple(r.exit_code, r.body.dump(), r.text);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Ext, stratification and Chevalley-Eilenberg checks";
  m.def("run", &run, py::arg("paths"), py::arg("command"), py::arg("args"),
        py::arg("max_degree") = py::none(), py::arg("order") = py::none(),
        py::arg("segment") = py::none(), py::arg("exhaustive_bound") = 8, py::arg("samples") = 100,
        py::arg("seed") = py::none(),
        "Run one report command; returns (exit_code, json_text, text).");
  m.def("commands", &report_commands);
}
