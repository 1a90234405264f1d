#include <fstream>
#include <sstream>

#include "doctest.h"
#include "orbimod/cli.hpp"
#include "orbimod/errors.hpp"

using namespace orbimod;
using json = nlohmann::ordered_json;

namespace {

std::string fixture(const std::string& name) {
  std::ifstream in(std::string(ORBIMOD_FIXTURE_DIR) + "/" + name);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json ok(std::string_view command, std::string_view document) {
  const auto r = run_command(command, document);
  INFO(r.error);
  REQUIRE(r.exit_code == 0);
  return json::parse(r.output);
}

std::string schema_path(std::string_view command, std::string_view document) {
  const auto r = run_command(command, document);
  REQUIRE(r.exit_code == 2);
  return json::parse(r.error)["error"]["path"].get<std::string>();
}

}  // namespace

TEST_CASE("parse_input accepts valid documents") {
  CHECK_NOTHROW(parse_input(Command::Surface, R"({"genus":1,"alphas":[2]})"));
  CHECK_NOTHROW(parse_input(Command::Bundle, R"({"genus":0,"cone_points":[{"alpha":2,"x":0,"x_prime":1}],"l":0})"));
  CHECK_NOTHROW(parse_input(Command::Check, ""));
}

TEST_CASE("schema errors carry field paths") {
  CHECK(schema_path("bundle", R"({"genus":0,"cone_points":[{"alpha":1,"x":0,"x_prime":0}],"l":0})") ==
        "cone_points[0].alpha");
  CHECK(schema_path("bundle", R"({"genus":0,"cone_points":[{"alpha":3,"x":2,"x_prime":1}],"l":0})") ==
        "cone_points[0].x");
  CHECK(schema_path("bundle", R"({"genus":0,"cone_points":[],"l":0})") == "cone_points");
  CHECK(schema_path("surface", R"({"genus":0,"alphas":[]})") == "alphas");
  CHECK(schema_path("surface", R"({"genus":-1,"alphas":[2]})") == "genus");
  CHECK(schema_path("surface", R"({"genus":1,"alphas":[2],"colour":1})") == "colour");
  CHECK(schema_path("surface", R"({"genus":1,"alphas":[2],"line":{"b":0,"y":[2]}})") == "line.y[0]");
  CHECK(schema_path("bundle", R"({"genus":0,"cone_points":[{"alpha":2,"x":0,"x_prime":1}],"l":0,"stability":{"class":"odd"}})") ==
        "stability.class");
  CHECK(schema_path("strata", R"({"genus":0,"cone_points":[{"alpha":2,"x":0,"x_prime":1}]})") == "l");
  CHECK(schema_path("strata", "[1,2]") == "");
  CHECK(run_command("strata", "{not json").exit_code == 2);
  CHECK(run_command("nosuch", "{}").exit_code == 2);
  CHECK(run_command("surface", R"({"genus":1,"alphas":[2]})", "xml").exit_code == 2);
  CHECK_THROWS_AS(parse_input(Command::Surface, R"({"genus":1,"alphas":[1]})"), SchemaError);
}

TEST_CASE("domain errors exit with 1") {
  const auto r = run_command("strata", fixture("bundle_six_halves.json").replace(0, 0, ""));
  CHECK(r.exit_code == 2);  // stability and sub are not strata fields
  const auto reducible = run_command(
      "strata", R"({"genus":0,"cone_points":[{"alpha":2,"x":0,"x_prime":1},{"alpha":2,"x":0,"x_prime":1},{"alpha":2,"x":0,"x_prime":1},{"alpha":2,"x":0,"x_prime":1},{"alpha":2,"x":0,"x_prime":1},{"alpha":2,"x":0,"x_prime":1}],"l":0})");
  CHECK(reducible.exit_code == 1);
  CHECK(json::parse(reducible.error)["error"]["type"] == "domain_error");
  CHECK(reducible.output.empty());
}

TEST_CASE("strata report") {
  const auto doc = ok("strata", fixture("torus_one_point.json"));
  REQUIRE(doc["strata"].size() == 1);
  CHECK(doc["strata"][0]["index"] == 2);
  CHECK(doc["strata"][0]["value_over_2pi"] == "1/2");
  CHECK(doc["strata"][0]["cover"] == 4);
  CHECK(doc["minimum"]["kind"] == "stable_bundles");
  CHECK(doc["poincare"]["text"] == "P(N0) + 4t^2");
  CHECK(doc["euler_characteristic"].is_null());
  CHECK(doc["assumptions"]["perfect_morse"] == true);

  const auto point = ok("strata", fixture("triangle_odd.json"));
  CHECK(point["strata"].size() == 1);
  CHECK(point["poincare"]["coeffs"] == json::array({1}));
  CHECK(point["topology"]["compact"] == true);
}

TEST_CASE("poincare report") {
  const auto doc = ok("poincare", fixture("sphere_four_fives.json"));
  CHECK(doc["poincare"]["coeffs"] == json::array({1, 0, 5}));
  CHECK(doc["euler_characteristic"] == 6);
  const auto torus = ok("poincare", fixture("poincare_torus.json"));
  CHECK(torus["poincare"]["coeffs"] == json::array({1, 0, 5}));
  CHECK(torus["poincare"]["symbolic"].empty());
  CHECK(torus["euler_characteristic"] == 6);
}

TEST_CASE("surface report") {
  const auto doc = ok("surface", fixture("surface_genus_two.json"));
  CHECK(doc["surface"]["euler_characteristic"] == "-5/2");
  CHECK(doc["k_squared"]["chi"] == 4);
  CHECK(doc["k_squared"]["h0"]["value"] == 4);
  CHECK(doc["teichmuller_dimension"] == 4);
  CHECK(doc["line"]["within_milnor_wood"] == true);
  CHECK(doc["topological_roots"]["count"] == 1);
  CHECK(doc["presentation"]["text"] == "<a1, b1, a2, b2, q1 | q1^2, q1 a1 b1 a1^-1 b1^-1 a2 b2 a2^-1 b2^-1>");
}

TEST_CASE("bundle report") {
  const auto doc = ok("bundle", fixture("bundle_six_halves.json"));
  CHECK(doc["moduli_dimension"] == 6);
  CHECK(doc["reducible"]["m"] == 1);
  CHECK(doc["sub_bundle"]["two_c1_minus_det"] == "0/1");
  CHECK(doc["sub_bundle"]["semistable_h0"]["klm2"] == 2);
  CHECK(doc["stability"]["verdict"] == "yes");
  CHECK(doc["parabolic_weights"][0]["lambda_prime"] == "1/2");
}

TEST_CASE("spectral report") {
  const auto doc = ok("spectral", fixture("torus_one_point.json"));
  CHECK(doc["fibre"]["kind"] == "jacobian");
  CHECK(doc["fibre"]["dim"] == 1);
  CHECK(doc["special_case"]["c1"] == "0/1");
  CHECK(doc["generic_caveat"] == true);
}

TEST_CASE("reps reports") {
  const auto surface = ok("reps", fixture("reps_surface.json"));
  CHECK(surface["rotation"]["dimension"] == 10);
  CHECK(surface["psl2r"]["rank"] == 5);
  CHECK(surface["milnor_wood"]["holds"] == true);
  const auto bundle = ok("reps", fixture("sphere_four_fives.json"));
  CHECK(bundle["real_components"].size() == 6);
}

TEST_CASE("text format mirrors json") {
  const auto r = run_command("poincare", fixture("sphere_four_fives.json"), "text");
  REQUIRE(r.exit_code == 0);
  CHECK(r.output.find("text: 1 + 5t^2") != std::string::npos);
  CHECK(r.output.find("euler_characteristic: 6") != std::string::npos);
}

TEST_CASE("reports are deterministic") {
  for (const char* name : {"torus_one_point.json", "sphere_four_fives.json", "genus_two_mixed.json"}) {
    const auto doc = fixture(name);
    CHECK(run_command("strata", doc).output == run_command("strata", doc).output);
  }
}
