#include "ecdc/io.hpp"

#include <fstream>

#include "ecdc/error.hpp"

namespace ecdc {

namespace {

[[noreturn]] void bad(const std::string& field, const std::string& what) {
  throw Error(ErrorCode::kValidation, field + ": " + what);
}

const Json& member(const Json& j, const char* key, const std::string& field) {
  if (!j.is_object() || !j.contains(key)) bad(field, std::string("missing \"") + key + "\"");
  return j.at(key);
}

double number(const Json& j, const std::string& field) {
  if (!j.is_number()) bad(field, "expected a number");
  return j.get<double>();
}

Json bound_value(const Bound& b, bool lower) {
  if (b.is_unbounded()) return lower ? "-inf" : "+inf";
  return b.at;
}

const char* bound_kind(const Bound& b) { return b.is_closed() ? "closed" : "open"; }

Bound bound_from(const Json& j, const char* at_key, const char* kind_key, bool lower, const std::string& field) {
  ExtReal at = extreal_from_json(member(j, at_key, field), field + "." + at_key);
  if (!at.is_finite()) {
    if (at.is_neg_inf() != lower) bad(field + "." + at_key, "infinite end on the wrong side");
    return Bound::unbounded();
  }
  const Json& kind = member(j, kind_key, field);
  if (kind == "closed") return Bound::closed(at.value());
  if (kind == "open") return Bound::open(at.value());
  bad(field + "." + kind_key, "expected \"closed\" or \"open\"");
}

Formula formula_from(const Json& j, const std::string& field) {
  const Json& type = member(j, "type", field);
  if (type == "affine") return Affine{number(member(j, "a", field), field + ".a"), number(member(j, "b", field), field + ".b")};
  if (type == "negsqrt") return NegSqrt{number(member(j, "c", field), field + ".c")};
  if (type == "point") return PointValue{number(member(j, "v", field), field + ".v")};
  bad(field + ".type", "unknown formula type (affine, negsqrt, point)");
}

Json formula_json(const Formula& f) {
  if (const auto* a = std::get_if<Affine>(&f)) return {{"type", "affine"}, {"a", a->a}, {"b", a->b}};
  if (const auto* n = std::get_if<NegSqrt>(&f)) return {{"type", "negsqrt"}, {"c", n->c}};
  return {{"type", "point"}, {"v", std::get<PointValue>(f).v}};
}

Json optional_number(const std::optional<double>& x) { return x ? Json(*x) : Json(nullptr); }

}  // namespace

Json to_json(const ExtReal& v) {
  if (v.is_pos_inf()) return "+inf";
  if (v.is_neg_inf()) return "-inf";
  return v.value();
}

ExtReal extreal_from_json(const Json& j, const std::string& field) {
  if (j.is_number()) return ExtReal(j.get<double>());
  if (j == "+inf" || j == "inf") return ExtReal::pos_inf();
  if (j == "-inf") return ExtReal::neg_inf();
  bad(field, "expected a number, \"+inf\" or \"-inf\"");
}

Json to_json(const Interval& set) {
  return {{"lo", bound_value(set.lo, true)},
          {"lo_kind", bound_kind(set.lo)},
          {"hi", bound_value(set.hi, false)},
          {"hi_kind", bound_kind(set.hi)}};
}

Interval interval_from_json(const Json& j, const std::string& field) {
  return {bound_from(j, "lo", "lo_kind", true, field), bound_from(j, "hi", "hi_kind", false, field)};
}

Json to_json(const PiecewiseFunction& f) {
  Json pieces = Json::array();
  for (const Piece& p : f.pieces()) {
    Json pj = to_json(p.dom);
    pj["formula"] = formula_json(p.formula);
    pieces.push_back(std::move(pj));
  }
  return {{"pieces", std::move(pieces)}};
}

PiecewiseFunction function_from_json(const Json& j, const std::string& field) {
  const Json& arr = member(j, "pieces", field);
  if (!arr.is_array() || arr.empty()) bad(field + ".pieces", "expected a nonempty array");
  std::vector<Piece> pieces;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    std::string pf = field + ".pieces[" + std::to_string(i) + "]";
    pieces.push_back(Piece{interval_from_json(arr[i], pf), formula_from(member(arr[i], "formula", pf), pf + ".formula")});
  }
  try {
    return PiecewiseFunction(std::move(pieces));
  } catch (const Error& e) {
    bad(field, e.what());
  }
}

Json to_json(const DCInstance& inst) {
  return {{"name", inst.name}, {"f", to_json(inst.f)}, {"g", to_json(inst.g)}, {"A", to_json(inst.A)}};
}

DCInstance instance_from_json(const Json& j) {
  std::string name = j.is_object() && j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "";
  DCInstance inst{function_from_json(member(j, "f", "instance"), "f"), function_from_json(member(j, "g", "instance"), "g"),
                  interval_from_json(member(j, "A", "instance"), "A"), name};
  inst.validate();
  return inst;
}

DCInstance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kValidation, "cannot open instance file " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kValidation, path + ": " + e.what());
  }
  return instance_from_json(j);
}

Json to_json(const SearchConfig& cfg) {
  return {{"box", {cfg.box_lo, cfg.box_hi}}, {"points", cfg.points}, {"tol", cfg.tol}};
}

SearchConfig search_config_from_json(const Json& j) {
  SearchConfig cfg;
  const Json& box = member(j, "box", "config");
  if (!box.is_array() || box.size() != 2) bad("config.box", "expected [lo, hi]");
  cfg.box_lo = number(box[0], "config.box[0]");
  cfg.box_hi = number(box[1], "config.box[1]");
  const Json& pts = member(j, "points", "config");
  if (!pts.is_number_integer()) bad("config.points", "expected an integer");
  cfg.points = pts.get<int>();
  cfg.tol = number(member(j, "tol", "config"), "config.tol");
  cfg.validate();
  return cfg;
}

Json to_json(const ValueReport& r) {
  Json j{{"value", to_json(r.value)},
         {"attainment", to_string(r.attainment)},
         {"method", to_string(r.method)},
         {"tail", r.tail},
         {"witness", optional_number(r.witness)}};
  if (r.witness_w) j["witness_w"] = {r.witness_w->xstar, r.witness_w->ystar, r.witness_w->alpha};
  return j;
}

Json to_json(const SliceRay& r) {
  return {{"anchor", {0.0 - r.pstar, 0.0}},
          {"threshold", to_json(r.threshold)},
          {"included", r.endpoint_included},
          {"certainty", to_string(r.certainty)}};
}

Json to_json(const PropertyVerdict& v) {
  return {{"property", v.property},
          {"pstar", v.pstar},
          {"left_ray", to_json(v.comparison.left)},
          {"right_ray", to_json(v.comparison.right)},
          {"relation", to_string(v.comparison.relation)},
          {"interpretation", v.comparison.interpretation},
          {"verdict", to_string(v.verdict)},
          {"value_verdict", to_string(v.value_verdict)},
          {"consistency", v.consistent ? "CONSISTENT" : "INTERNAL_INCONSISTENCY"}};
}

Json to_json(const TheoremVerdict& v) {
  return {{"pstar", v.pstar},
          {"hypothesis",
           {{"left_ray", to_json(v.hypothesis.left)},
            {"right_ray", to_json(v.hypothesis.right)},
            {"relation", to_string(v.hypothesis.relation)}}},
          {"lambda_disagreement", v.lambda_disagreement},
          {"clause_i", to_string(v.clause_i)},
          {"clause_ii", to_string(v.clause_ii)},
          {"outcome", to_string(v.outcome)}};
}

Json to_json(const SeparationReport& r) {
  Json j{{"exterior", {r.exterior[0], r.exterior[1]}}, {"verdict", to_string(r.verdict)}, {"margin", r.margin}};
  j["witness"] = r.witness ? Json{(*r.witness)[0], (*r.witness)[1]} : Json(nullptr);
  j["blocking_point"] = r.blocking_point ? Json{(*r.blocking_point)[0], (*r.blocking_point)[1]} : Json(nullptr);
  return j;
}

}  // namespace ecdc
