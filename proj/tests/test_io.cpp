#include <string>

#include "doctest.h"
#include "tcoh/catalog.hpp"
#include "tcoh/commands.hpp"
#include "tcoh/errors.hpp"
#include "tcoh/io.hpp"

using namespace tcoh;

namespace {

std::string data(const std::string& name) { return std::string(TCOH_DATA_DIR) + "/" + name; }

Json request(const std::string& command, Json extra = Json::object()) {
  extra["command"] = command;
  return extra;
}

}  // namespace

TEST_CASE("algebra round trip") {
  for (auto alg : {kronecker(Field::rationals()), beilinson_p2(Field::prime(5)), dual_numbers(Field::rationals())}) {
    AlgebraPtr back = algebra_from_json(algebra_to_json(*alg));
    CHECK(back->field() == alg->field());
    REQUIRE(back->dim() == alg->dim());
    for (size_t i = 0; i < alg->dim(); ++i)
      for (size_t j = 0; j < alg->dim(); ++j) CHECK(back->product(i, j) == alg->product(i, j));
  }
}

TEST_CASE("quiver files") {
  AlgebraPtr k = load_algebra(data("kronecker.json"));
  CHECK(k->dim() == 4);
  CHECK(k->basis_names() == std::vector<std::string>{"e_1", "e_2", "a", "b"});
  AlgebraPtr a3 = load_algebra(data("a3_rad2.json"));
  CHECK(a3->dim() == 5);
}

TEST_CASE("module actions follow from generators") {
  AlgebraPtr k = load_algebra(data("kronecker.json"));
  RightModule m = load_module(data("kronecker_regular_simple.json"), k);
  CHECK(m.dim() == 2);
  Matrix e2(2, 2);
  e2.at(1, 1) = Rational(1);
  CHECK(m.action(1) == e2);

  Json round = module_to_json(m, "kronecker.json");
  RightModule again = module_from_json(k, round);
  for (size_t b = 0; b < k->dim(); ++b) CHECK(again.action(b) == m.action(b));

  Bimodule top = load_bimodule(data("dual_numbers_top.json"));
  CHECK(top.dim() == 1);
  CHECK(top.left_action(0) == Matrix::identity(top.field(), 1));
}

TEST_CASE("malformed inputs") {
  AlgebraPtr k = kronecker(Field::rationals());
  Json bad_dim = {{"dim", 2}, {"action", Json::array({Json::array({2, Json::array({Json::array({0, 1})})})})}};
  CHECK_THROWS_AS(module_from_json(k, bad_dim), InputError);
  Json not_module = {{"dim", 1}, {"action", Json::array({Json::array({2, Json::array({Json::array({1})})})})}};
  CHECK_THROWS_AS(module_from_json(k, not_module), InputError);
  Json bad_scalar = {{"dim", 1}, {"action", Json::array({Json::array({0, Json::array({Json::array({"1/0"})})})})}};
  CHECK_THROWS_AS(module_from_json(k, bad_scalar), InputError);
  CHECK_THROWS_AS(field_from_json(Json{{"Fp", 4}}, "f"), InputError);
  CHECK_THROWS_AS(load_algebra("/nonexistent/algebra.json"), InputError);
  try {
    module_from_json(k, bad_dim);
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("module.action[0][1]") != std::string::npos);
  }
}

TEST_CASE("requests") {
  CHECK_THROWS_AS(request_from_json(Json{{"command", "tor"}, {"colour", 1}}), InputError);
  CHECK_THROWS_AS(request_from_json(Json{{"command", "tor"}, {"bounds", {{"cap", -1}}}}), InputError);
  CHECK_THROWS_AS(request_from_json(Json{{"command", "tor"}, {"bounds", {{"speed", 1}}}}), InputError);
  CommandResult r = run_request("{\"command\": ");
  CHECK(r.exit_code == 2);
  CHECK(r.report["error"].get<std::string>().find("byte") != std::string::npos);
  CHECK(run_request(R"({"command": "frobnicate"})").exit_code == 2);
}

TEST_CASE("command exit codes and reports") {
  Json flat = request("coherence", {{"algebra", "k"}, {"sigma", "free(1)"}, {"bounds", {{"cap", 2}, {"seed", 5}}}});
  CommandResult a = run_command(request_from_json(flat));
  CHECK(a.exit_code == 0);
  CHECK(a.report["verdict"] == "certified-flat-path");
  CHECK(a.report["bounds"] == flat["bounds"]);
  CHECK(a.report["tool"]["version"] == kToolVersion);
  CHECK(a.report["field"] == "Q");
  CHECK(a.report["certificate"]["seed"] == 5);
  CommandResult b = run_command(request_from_json(flat));
  CHECK(a.rendered == b.rendered);

  Json pur = request("purity", {{"algebra", "dual-numbers"}, {"sigma", "top"}, {"bounds", {{"max_power", 2}}}});
  CommandResult p = run_command(request_from_json(pur));
  CHECK(p.exit_code == 1);
  CHECK(p.report["purity"]["witness"]["stage"] == 2);
  CHECK(p.report["purity"]["witness"]["dim"] == 1);

  CommandResult t = run_command(request_from_json(request("theta", {{"algebra", "kronecker"}, {"bounds", {{"n", 1}}}})));
  CHECK(t.exit_code == 0);
  CHECK(t.report["dim"] == 12);
  Bimodule theta = bimodule_from_json(kronecker(Field::rationals()), t.report["theta"]);
  CHECK(theta.dim() == 12);

  CommandResult t0 = run_command(request_from_json(request("theta", {{"algebra", "kronecker"}, {"bounds", {{"n", 0}}}})));
  CHECK(t0.exit_code == 1);
  CHECK(t0.report["verdict"] == "hypothesis-failure");

  CommandResult gk = run_command(request_from_json(request("graded-kernel", {{"map", data("free_x_map.json")}})));
  CHECK(gk.exit_code == 0);
  CHECK(gk.report["kernel"]["generator_degrees"] == Json::array({0}));

  Json text = request("resolve", {{"algebra", data("dual_numbers_f2.json")}, {"bounds", {{"vertex", 0}, {"length", 2}}},
                                  {"format", "text"}});
  CommandResult rt = run_command(request_from_json(text));
  CHECK(rt.exit_code == 1);
  CHECK(rt.rendered.find("verdict: not-terminated-within-bound") != std::string::npos);
  CHECK(rt.report["field"] == Json{{"Fp", 2}});
}
