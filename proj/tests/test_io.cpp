#include <doctest.h>

#include "ecdc/error.hpp"
#include "ecdc/instances.hpp"
#include "ecdc/io.hpp"

using namespace ecdc;

namespace {

ErrorCode parse_code(const std::string& text) {
  try {
    instance_from_json(Json::parse(text));
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kDisagreement;
}

}  // namespace

TEST_CASE("extended reals round-trip") {
  for (const ExtReal& v : {ExtReal(1.25), ExtReal::pos_inf(), ExtReal::neg_inf(), ExtReal(-3.0)})
    CHECK(extreal_from_json(to_json(v), "v") == v);
  CHECK_THROWS_AS(extreal_from_json(Json("abc"), "v"), Error);
}

TEST_CASE("instances round-trip") {
  std::vector<DCInstance> all = random_instances(31, 10, GenConfig{0.5});
  all.push_back(example_weak_fails());
  all.push_back(example_nonsolvable());
  all.push_back(example_hypothesis());
  for (const DCInstance& inst : all) {
    const Json j = to_json(inst);
    const DCInstance back = instance_from_json(Json::parse(j.dump()));
    CHECK(to_json(back) == j);
    CHECK(back.name == inst.name);
    CHECK(back.A == inst.A);
    for (double x : {-2.0, -0.5, 0.0, 0.25, 1.0, 3.0}) {
      CHECK(back.f(x) == inst.f(x));
      CHECK(back.g(x) == inst.g(x));
    }
  }
}

TEST_CASE("malformed instances are validation errors") {
  CHECK(parse_code("{}") == ErrorCode::kValidation);
  CHECK(parse_code(R"({"name":"x","f":{"pieces":[]},"g":{"pieces":[]},"A":{}})") == ErrorCode::kValidation);
  const std::string line = R"({"pieces":[{"lo":"-inf","lo_kind":"open","hi":"+inf","hi_kind":"open",
                                          "formula":{"type":"affine","a":1,"b":0}}]})";
  const std::string A = R"({"lo":"-inf","lo_kind":"open","hi":"+inf","hi_kind":"open"})";
  CHECK(parse_code(R"({"name":"ok","f":)" + line + R"(,"g":)" + line + R"(,"A":)" + A + "}") ==
        ErrorCode::kDisagreement);  // parses cleanly
  const std::string cubic = R"({"pieces":[{"lo":0,"lo_kind":"closed","hi":1,"hi_kind":"closed",
                                           "formula":{"type":"cubic"}}]})";
  CHECK(parse_code(R"({"name":"x","f":)" + cubic + R"(,"g":)" + line + R"(,"A":)" + A + "}") ==
        ErrorCode::kValidation);
  const std::string narrow = R"({"pieces":[{"lo":0,"lo_kind":"closed","hi":1,"hi_kind":"closed",
                                            "formula":{"type":"affine","a":0,"b":0}}]})";
  CHECK(parse_code(R"({"name":"x","f":)" + line + R"(,"g":)" + narrow + R"(,"A":)" + A + "}") ==
        ErrorCode::kValidation);
  CHECK_THROWS_AS(load_instance("/nonexistent/instance.json"), Error);
}

TEST_CASE("search configuration round-trip") {
  SearchConfig c;
  c.box_lo = -10;
  c.box_hi = 20;
  c.points = 513;
  c.tol = 1e-8;
  const SearchConfig back = search_config_from_json(to_json(c));
  CHECK(back.box_lo == c.box_lo);
  CHECK(back.box_hi == c.box_hi);
  CHECK(back.points == c.points);
  CHECK(back.tol == c.tol);
  Json bad = to_json(c);
  bad["points"] = "many";
  CHECK_THROWS_AS(search_config_from_json(bad), Error);
}

TEST_CASE("report serialisation") {
  const CheckConfig cc;
  const SliceSet s = compute_slices(example_nonsolvable(), 0.0, cc);
  const Json vr = to_json(s.vDF);
  CHECK(vr["attainment"] == "not_attained");
  const Json ray = to_json(s.omega);
  CHECK(ray["included"] == false);
  CHECK(ray["certainty"] == "GRID_CERTIFIED");  // the square-root f is not piecewise affine
  const Json pv = to_json(check_strong_duality(s, cc.tol).front());
  CHECK(pv["verdict"] == "FAILS");
  CHECK(pv["consistency"] == "CONSISTENT");
}
