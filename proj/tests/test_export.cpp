#include <doctest.h>

#include "cyclelift/export.hpp"

using namespace cyclelift;

TEST_CASE("graph JSON follows the documented shape") {
  const PolyFunc f = parse_poly("x^2+1");
  const Json j = graph_to_json(build_graph(f, make_modulus(3)), f);
  CHECK(j.dump() == R"({"modulus":3,"poly":[1,0,1],"succ":[1,2,2],"cycles":[{"vertices":[2],"size":1}]})");
}

TEST_CASE("DOT export has one edge line per vertex") {
  const std::string dot = graph_to_dot(build_graph(parse_poly("x^2+1"), make_modulus(3)));
  CHECK(dot == "digraph \"G(x^2 + 1, Z_3)\" {\n  0 -> 1;\n  1 -> 2;\n  2 -> 2 [color=red];\n}\n");
  const std::string plain = graph_to_dot(build_graph(parse_poly("x^2+1"), make_modulus(3)), false);
  CHECK(plain.find("color") == std::string::npos);
}

TEST_CASE("lift report JSON") {
  const LiftReport r = verify_lift(parse_poly("x^2+1"), Cycle{{2}, 3}, PrimePowerModulus(3, 1));
  CHECK(lift_to_json(r).dump() ==
        R"({"case":"LambdaOne_rNonzero","lambda_bar":1,"order":1,"r":1,"predicted":[[3,1]],"observed":[[3,1]],"match":true})");
  const LiftPrediction p = predict_lift(parse_poly("x^3+2"), Cycle{{0, 2, 1}, 3}, PrimePowerModulus(3, 1));
  CHECK(lift_to_json(p).dump() == R"({"case":"LambdaZero","lambda_bar":0,"order":null,"r":1,"predicted":[[3,1]]})");
}

TEST_CASE("large coefficients serialize as strings") {
  const Json j = poly_to_json(parse_poly("99999999999999999999x + 1"));
  CHECK(j.dump() == R"([1,"99999999999999999999"])");
}

TEST_CASE("JSON output round-trips byte for byte") {
  const PolyFunc f = parse_poly("x^2+1");
  for (const Json& j : {tower_to_json(tower(f, 3, 3)), graph_to_json(build_graph(f, make_modulus(10)), f),
                        lcm_rows_to_json(lcm_cycle_check(f, 3, 5))}) {
    const std::string text = j.dump(2);
    CHECK(Json::parse(text).dump(2) == text);
  }
}

TEST_CASE("lcm rows JSON") {
  CHECK(lcm_rows_to_json(lcm_cycle_check(parse_poly("x+1"), 2, 3)).dump() ==
        R"([{"k":2,"l":3,"lcm":6,"found":true}])");
}
