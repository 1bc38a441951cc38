#include <doctest.h>

#include "support.hpp"

#include "strata/io/report.hpp"

using namespace strata::test;
namespace io = strata::io;
namespace alg = strata::algebra;

namespace {

io::Report run(const std::string& command, std::vector<std::string> args,
               std::optional<std::size_t> max_degree = std::nullopt) {
  io::ReportOptions o;
  o.args = std::move(args);
  o.max_degree = max_degree;
  return io::run_report(bundled(), command, o);
}

}  // namespace

TEST_CASE("round trip: serialising and reloading reproduces every entry") {
  auto ws = io::load_definitions({STRATA_DATA_DIR, fixture("t2_modules.json")});
  io::json doc = io::workspace_to_json(ws);
  io::Workspace again;
  io::load_document(again, doc, "<round trip>");
  REQUIRE(again.algebras.size() == ws.algebras.size());
  for (const auto& [name, e] : ws.algebras) CHECK(io::algebra_to_json(again.algebras.at(name)) == io::algebra_to_json(e));
  for (const auto& [name, e] : ws.modules) CHECK(io::module_to_json(again.modules.at(name)) == io::module_to_json(e));
  for (const auto& [name, e] : ws.lie_algebras)
    CHECK(io::lie_algebra_to_json(again.lie_algebras.at(name)) == io::lie_algebra_to_json(e));
  for (const auto& [name, e] : ws.lie_modules)
    CHECK(io::lie_module_to_json(again.lie_modules.at(name)) == io::lie_module_to_json(e));
  CHECK(io::workspace_to_json(again) == doc);
}

TEST_CASE("round trip over a prime field keeps integer scalars") {
  auto ws = io::load_definitions({fixture("t2_f5.json")});
  io::json doc = io::workspace_to_json(ws);
  io::Workspace again;
  io::load_document(again, doc, "<round trip>");
  CHECK(io::workspace_to_json(again) == doc);
  CHECK(io::scalar_to_json(Field::prime(5).from_int(7)) == io::json(2));
  CHECK(io::scalar_to_json(Field::rationals().parse_scalar("-3/6")) == io::json("-1/2"));
}

TEST_CASE("name resolution") {
  const auto& e = bundled().algebra("sl2O");
  CHECK(io::resolve_order(e, std::string("1<2")).leq(0, 1));
  CHECK(io::resolve_order(e, std::nullopt).leq(1, 0));
  CHECK(io::resolve_order(e, std::string("antichain")).to_string() == "antichain");
  CHECK_THROWS_AS(io::resolve_order(e, std::string("nope")), io::NameError);
  CHECK(io::resolve_segment(e, "antidominant") == std::vector<std::size_t>{1});
  CHECK(io::resolve_ideal(e, {"e1"}).dim() == 4);
  CHECK(io::resolve_ideal(e, {"rad"}).dim() == 3);
  CHECK(io::resolve_ideal(e, {"ab"}).dim() == 1);
  CHECK(io::resolve_ideal(e, {"A"}).dim() == 5);
  CHECK_THROWS_AS(io::resolve_module(bundled(), "sl2O", "Q7"), io::NameError);
  CHECK_THROWS_AS(bundled().algebra("missing"), io::NameError);
  CHECK(io::resolve_module(bundled(), "sl2O", "M1", order_of("sl2O")).dim() == 2);
  CHECK(io::resolve_module(bundled(), "sl2O", "I1").dim() == 2);
}

TEST_CASE("report determinism: identical JSON on repeated runs") {
  for (const auto& [cmd, args] : std::vector<std::pair<std::string, std::vector<std::string>>>{
           {"stratify", {"sl2O"}},
           {"ext", {"zigzag", "S1", "S1"}},
           {"embed-check", {"t3"}},
           {"lie-cup", {"sl2", "adjoint", "adjoint", "adjoint"}}}) {
    io::ReportOptions o;
    o.args = args;
    if (cmd == "embed-check") o.segment = "s12";
    o.max_degree = 3;
    o.samples = 20;
    CHECK(io::run_report(bundled(), cmd, o).body.dump() == io::run_report(bundled(), cmd, o).body.dump());
  }
}

TEST_CASE("exit code contract") {
  CHECK(run("validate", {}).exit_code == io::verified);
  CHECK(run("ext", {"t2", "S2", "S1"}, 4).exit_code == io::verified);
  CHECK(run("stratify", {"t2"}).exit_code == io::verified);
  CHECK(run("stratify", {"zigzag"}).exit_code == io::refuted);
  CHECK(run("thm7", {"zigzag", "e2"}, 6).exit_code == io::refuted);
  CHECK(run("cor8", {"zigzag", "e1"}, 6).exit_code == io::refuted);
  CHECK(run("lemma5", {"sl2O", "P2", "e1"}).exit_code == io::refuted);
  CHECK(run("lemma5", {"sl2O", "P2", "rad"}).exit_code == io::verified);
  auto bad = run("lemma5", {"sl2O", "S1", "rad"});
  CHECK(bad.exit_code == io::input_error);
  CHECK(bad.body.contains("error"));
  CHECK(run("ext", {"nope", "S1", "S1"}).exit_code == io::input_error);
  CHECK(run("ext", {"t2"}).exit_code == io::input_error);
  CHECK(run("frobnicate", {}).exit_code == io::input_error);
}

TEST_CASE("ext report carries the truncation warning only when incomplete") {
  auto z = run("ext", {"zigzag", "S1", "S1"}, 3);
  CHECK(z.body.contains("warning"));
  CHECK(z.body["complete"] == false);
  auto t = run("ext", {"t2", "S2", "S1"}, 4);
  CHECK_FALSE(t.body.contains("warning"));
  CHECK(t.body["dims"] == io::json::array({0, 1, 0, 0, 0}));
  CHECK(t.body["hom_dim_check"] == true);
}

TEST_CASE("the seed source is recorded") {
  io::ReportOptions o;
  o.args = {"abelian1", "trivial", "trivial", "trivial"};
  o.samples = 5;
  auto r = io::run_report(bundled(), "lie-cup", o);
  CHECK(r.body["seed"] == 20240601);
  CHECK(r.body["seed_source"] == "default");
}

TEST_CASE("an empty path list loads an empty workspace") {
  CHECK(io::load_definitions({}).empty());
}
