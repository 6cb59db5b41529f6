#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "ecdc/error.hpp"
#include "ecdc/instances.hpp"
#include "ecdc/io.hpp"

using namespace ecdc;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValueMismatch = 2;
constexpr int kExitInconsistent = 3;
constexpr int kExitValidation = 4;

struct RunConfig {
  std::vector<double> box{-64.0, 64.0};
  int points = 4097;
  double tol = 1e-6;
  std::vector<double> pstar{-5.0, 5.0, 21.0};
  std::string format = "json";

  CheckConfig check() const {
    CheckConfig c;
    c.search.box_lo = box[0];
    c.search.box_hi = box[1];
    c.search.points = points;
    c.search.tol = std::min(1e-9, tol);
    c.tol = tol;
    return c;
  }
  std::vector<double> pstars() const { return pstar_grid(pstar[0], pstar[1], static_cast<int>(pstar[2])); }

  void validate() const {
    if (!(tol > 0.0)) throw Error(ErrorCode::kValidation, "--tol must be positive");
    if (pstar[2] < 1 || pstar[2] != static_cast<int>(pstar[2])) {
      throw Error(ErrorCode::kValidation, "--pstar-grid N must be a positive integer");
    }
    check().search.validate();
    pstars();
  }

  Json to_json() const {
    Json j = ecdc::to_json(check().search);
    j["check_tol"] = tol;
    j["pstar_grid"] = {pstar[0], pstar[1], static_cast<int>(pstar[2])};
    j["format"] = format;
    return j;
  }
};

// Collects report content and the exit status it implies.
struct Report {
  Json body = Json::object();
  std::vector<PropertyVerdict> verdicts;
  Json expected_checks = Json::array();
  bool mismatch = false;
  bool inconsistent = false;

  void expect(const std::string& check, const Json& expected, const Json& observed, bool pass) {
    expected_checks.push_back({{"check", check}, {"expected", expected}, {"observed", observed}, {"pass", pass}});
    mismatch = mismatch || !pass;
  }
  void add(const std::vector<PropertyVerdict>& vs) {
    for (const PropertyVerdict& v : vs) add(v);
  }
  void add(const PropertyVerdict& v) {
    verdicts.push_back(v);
    inconsistent = inconsistent || !v.consistent;
  }
  int exit_code() const {
    if (inconsistent) return kExitInconsistent;
    return mismatch ? kExitValueMismatch : kExitOk;
  }
};

std::string csv_field(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

std::string render(const Report& rep, const RunConfig& cfg, const Json& header) {
  if (cfg.format == "csv") {
    std::ostringstream os;
    os << "property,pstar,left_threshold,left_included,left_certainty,right_threshold,right_included,"
          "right_certainty,relation,verdict,value_verdict,consistency\n";
    for (const PropertyVerdict& v : rep.verdicts) {
      Json j = to_json(v);
      os << v.property << ',' << csv_field(j["pstar"]);
      for (const char* side : {"left_ray", "right_ray"}) {
        os << ',' << csv_field(j[side]["threshold"]) << ',' << csv_field(j[side]["included"]) << ','
           << csv_field(j[side]["certainty"]);
      }
      os << ',' << csv_field(j["relation"]) << ',' << csv_field(j["verdict"]) << ',' << csv_field(j["value_verdict"])
         << ',' << csv_field(j["consistency"]) << '\n';
    }
    return os.str();
  }
  Json out = header;
  out["config"] = cfg.to_json();
  out["results"] = rep.body;
  Json vs = Json::array();
  for (const PropertyVerdict& v : rep.verdicts) vs.push_back(to_json(v));
  out["verdicts"] = std::move(vs);
  if (!rep.expected_checks.empty()) out["expected_checks"] = rep.expected_checks;
  out["status"] = rep.inconsistent ? "INTERNAL_INCONSISTENCY" : rep.mismatch ? "EXPECTED_VALUE_MISMATCH" : "OK";
  return out.dump(2) + "\n";
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kValidation, "cannot write " + path);
  out << text;
}

Json values_json(const SliceSet& s) {
  return {{"vP", to_json(s.vP)},
          {"vDF", to_json(s.vDF)},
          {"vDbarF", to_json(s.vDbarF.value)},
          {"slices", {{"epi", to_json(s.epi)}, {"omega", to_json(s.omega)}, {"K", to_json(s.k)}}}};
}

bool exact_equal(const ExtReal& v, double x) { return v.is_finite() && v.value() == x; }
bool within(const ExtReal& v, double x, double tol) { return v.is_finite() && std::abs(v.value() - x) <= tol; }

const PropertyVerdict& find(const std::vector<PropertyVerdict>& vs, const std::string& name) {
  for (const PropertyVerdict& v : vs) {
    if (v.property == name) return v;
  }
  throw Error(ErrorCode::kValidation, "missing verdict " + name);
}

Report run_square(const RunConfig&) {
  Report rep;
  SquareExample ex = example_square();
  SeparationConfig sc;
  auto c_reports = is_e_convex(ex.C, ex.exterior_C, sc);
  auto d_reports = is_e_convex(ex.D, ex.dashed_edge, sc);
  Json cj = Json::array();
  Json dj = Json::array();
  bool c_ok = true;
  bool d_ok = true;
  for (const auto& r : c_reports) {
    cj.push_back(to_json(r));
    c_ok = c_ok && r.verdict == SeparationVerdict::kSeparated;
  }
  for (const auto& r : d_reports) {
    dj.push_back(to_json(r));
    d_ok = d_ok && r.verdict == SeparationVerdict::kNotSeparated && r.blocking_point == ex.P;
  }
  rep.body = {{"C", {{"samples", ex.C.points.size()}, {"exterior_tests", cj}}},
              {"C_plus_P", {{"samples", ex.D.points.size()}, {"exterior_tests", dj}}}};
  rep.expect("C separated at every sampled exterior point", true, c_ok, c_ok);
  rep.expect("C+P not separated on the dashed edge, blocked by P", true, d_ok, d_ok);
  return rep;
}

Report run_dc_example(const DCInstance& inst, const RunConfig& cfg) {
  const CheckConfig cc = cfg.check();
  Report rep;
  const SliceSet s = compute_slices(inst, 0.0, cc);
  rep.body = values_json(s);
  rep.body["instance"] = to_json(inst);
  auto weak = check_weak_duality(s, cc.tol);
  auto gap = check_zero_gap(s, cc.tol);
  auto strong = check_strong_duality(s, cc.tol);
  rep.add(weak);
  rep.add(gap);
  rep.add(strong);
  const Classification df = classify(s.vP, s.vDF.value, s.vDF.attained(), cc.tol);
  rep.body["classification"] = {{"DF", to_string(df)},
                                {"DbarF", to_string(classify(s.vP, s.vDbarF.value.value,
                                                             s.vDbarF.inner_solvable(cc.tol), cc.tol))}};
  rep.body["g_e_convex"] = is_e_convex_function(inst.g);

  if (inst.name == "ex3_1_weak_fails") {
    ExtReal bound = dual_DF_objective(inst, {0.0, 0.0, 1.0}, cc.search);
    rep.body["candidate_bound"] = {{"outer", {0.0, 0.0, 1.0}}, {"value", to_json(bound)}};
    rep.expect("v(P) = -1", -1.0, to_json(s.vP.value), exact_equal(s.vP.value, -1.0));
    rep.expect("v(D^F) >= 0 via (0,0,1)", 0.0, to_json(bound), bound.is_finite() && bound.value() >= -1e-9);
    rep.expect("classification", "WEAK_FAILS", to_string(df), df == Classification::kWeakFails);
    TheoremVerdict t = check_theorem_mixed(inst, 0.0, cc);
    rep.body["theorem"] = to_json(t);
    rep.expect("theorem hypothesis fails", "HYPOTHESIS_FAILS", to_string(t.outcome),
               t.outcome == TheoremOutcome::kHypothesisFails);
  } else if (inst.name == "ex5_1_nonsolvable") {
    rep.expect("v(P) = 0", 0.0, to_json(s.vP.value), exact_equal(s.vP.value, 0.0));
    rep.expect("v(D^F) = 0", 0.0, to_json(s.vDF.value), within(s.vDF.value, 0.0, 1e-6));
    rep.expect("v(D^F) not attained", "not_attained", to_string(s.vDF.attainment),
               s.vDF.attainment == Attainment::kNotAttained);
    rep.expect("Omega slice open at 0", false, s.omega.endpoint_included,
               !s.omega.endpoint_included && within(s.omega.threshold, 0.0, 1e-6));
    rep.expect("epi slice closed at 0", true, s.epi.endpoint_included,
               s.epi.endpoint_included && within(s.epi.threshold, 0.0, 1e-6));
    const auto& z = find(gap, "zero_gap_DF");
    const auto& sd = find(strong, "strong_duality_DF");
    rep.expect("zero gap holds", "HOLDS", to_string(z.verdict), z.verdict == Verdict::kHolds);
    rep.expect("strong duality fails", "FAILS", to_string(sd.verdict), sd.verdict == Verdict::kFails);
  } else if (inst.name == "ex5_2_hypothesis") {
    TheoremVerdict t = check_theorem_mixed(inst, 0.0, cc);
    rep.body["theorem"] = to_json(t);
    std::vector<double> x0{0.0};
    SampledFunction hull = eco_hull(inst.g, x0, {cc.search.box_lo, cc.search.box_hi, cc.search.points});
    rep.body["eco_g_at_0"] = to_json(hull.value[0]);
    rep.body["g_at_0"] = to_json(inst.g(0.0));
    rep.expect("v(P) = 1", 1.0, to_json(s.vP.value), exact_equal(s.vP.value, 1.0));
    rep.expect("hypothesis slices equal", "EQUAL", to_string(t.hypothesis.relation),
               t.hypothesis.relation == Relation::kEqual);
    rep.expect("hypothesis thresholds = -1", -1.0, to_json(t.hypothesis.right.threshold),
               within(t.hypothesis.left.threshold, -1.0, 1e-6) && within(t.hypothesis.right.threshold, -1.0, 1e-6));
    rep.expect("eco g(0) = 0 while g(0) = 1", 0.0, to_json(hull.value[0]),
               within(hull.value[0], 0.0, 1e-6) && exact_equal(inst.g(0.0), 1.0));
  }
  return rep;
}

Report run_instance(const DCInstance& inst, const std::set<std::string>& checks, const RunConfig& cfg) {
  const CheckConfig cc = cfg.check();
  Report rep;
  rep.body["instance"] = to_json(inst);
  const bool need_slices = checks.count("values") || checks.count("weak") || checks.count("zero-gap") ||
                           checks.count("strong");
  if (need_slices) {
    const SliceSet s = compute_slices(inst, 0.0, cc);
    if (checks.count("values")) {
      rep.body["values"] = values_json(s);
      rep.body["classification"] = {
          {"DF", to_string(classify(s.vP, s.vDF.value, s.vDF.attained(), cc.tol))},
          {"DbarF", to_string(classify(s.vP, s.vDbarF.value.value, s.vDbarF.inner_solvable(cc.tol), cc.tol))}};
      rep.body["g_e_convex"] = is_e_convex_function(inst.g);
    }
    if (checks.count("weak")) rep.add(check_weak_duality(s, cc.tol));
    if (checks.count("zero-gap")) rep.add(check_zero_gap(s, cc.tol));
    if (checks.count("strong")) rep.add(check_strong_duality(s, cc.tol));
  }
  if (checks.count("theorem51")) rep.body["theorem"] = to_json(check_theorem_mixed(inst, 0.0, cc));
  if (checks.count("stable")) {
    const std::vector<double> ps = cfg.pstars();
    std::vector<SliceSet> rows =
        map_index<SliceSet>(ps.size(), [&](std::size_t i) { return compute_slices(inst, ps[i], cc); }, Exec::kSerial);
    Json table = Json::array();
    Json violators = Json::array();
    for (const SliceSet& s : rows) {
      auto strong = check_strong_duality(s, cc.tol);
      rep.add(strong);
      table.push_back({{"pstar", s.pstar},
                       {"vP", to_json(s.vP.value)},
                       {"vDF", to_json(s.vDF.value)},
                       {"vDbarF", to_json(s.vDbarF.value.value)},
                       {"strong_DF", to_string(strong[0].verdict)},
                       {"strong_DbarF", to_string(strong[1].verdict)}});
      if (strong[0].verdict != Verdict::kHolds) violators.push_back(s.pstar);
    }
    StableVerdict p0 = check_p0_d0_stable(inst.f, inst.A, ps, cc);
    rep.add(p0.rows);
    Json p0v = Json::array();
    for (double p : p0.violators) p0v.push_back(p);
    rep.body["stable"] = {{"table", table},
                          {"strong_DF_violators", violators},
                          {"p0_d0_violators", p0v},
                          {"p0_d0_uncertain", p0.uncertain}};
    if (checks.count("theorem51")) {
      StableTheoremVerdict st = check_theorem_mixed_stable(inst, ps, cc);
      Json trows = Json::array();
      for (const auto& r : st.rows) trows.push_back(to_json(r));
      rep.body["theorem_stable"] = {{"rows", trows}, {"violators", st.violators}, {"hypothesis_fails", st.hypothesis_fails}};
    }
  }
  return rep;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Evenly convex duality checks for DC problems on the real line"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--box", cfg.box, "conjugate-variable search box LO HI")->expected(2);
  app.add_option("--points", cfg.points, "grid points in the search box");
  app.add_option("--tol", cfg.tol, "tolerance for value and threshold comparisons");
  app.add_option("--pstar-grid", cfg.pstar, "perturbation grid LO HI N")->expected(3);
  app.add_option("--format", cfg.format, "report format")->check(CLI::IsMember({"json", "csv"}));

  std::string out_path;
  auto* ex = app.add_subcommand("example", "run a registered example");
  std::string example_id;
  ex->add_option("id", example_id, "example id")
      ->required()
      ->check(CLI::IsMember({"ex2_1_square", "ex3_1_weak_fails", "ex5_1_nonsolvable", "ex5_2_hypothesis"}));
  ex->add_option("--out", out_path, "report file (stdout when omitted)");

  auto* run = app.add_subcommand("run", "check an instance file");
  std::string instance_path;
  std::vector<std::string> check_list{"values"};
  run->add_option("file", instance_path, "instance JSON")->required();
  run->add_option("--check", check_list, "values,weak,zero-gap,strong,stable,theorem51")
      ->delimiter(',')
      ->check(CLI::IsMember({"values", "weak", "zero-gap", "strong", "stable", "theorem51"}));
  run->add_option("--out", out_path, "report file (stdout when omitted)");

  auto* gen = app.add_subcommand("gen", "generate random piecewise-affine instances");
  std::uint64_t seed = 1;
  int count = 10;
  double jump_prob = 0.0;
  std::string out_dir;
  gen->add_option("--seed", seed, "random seed");
  gen->add_option("--count", count, "number of instances")->check(CLI::PositiveNumber);
  gen->add_option("--jump-prob", jump_prob, "probability of a jump at a closed end of g")->check(CLI::Range(0.0, 1.0));
  gen->add_option("--out-dir", out_dir, "write one file per instance here (stdout array when omitted)");

  CLI11_PARSE(app, argc, argv);

  try {
    cfg.validate();
    if (*ex) {
      Report rep;
      if (example_id == "ex2_1_square") {
        rep = run_square(cfg);
      } else {
        DCInstance inst = example_id == "ex3_1_weak_fails"    ? example_weak_fails()
                          : example_id == "ex5_1_nonsolvable" ? example_nonsolvable()
                                                              : example_hypothesis();
        rep = run_dc_example(inst, cfg);
      }
      emit(render(rep, cfg, {{"command", "example"}, {"example", example_id}}), out_path);
      return rep.exit_code();
    }
    if (*run) {
      DCInstance inst = load_instance(instance_path);
      std::set<std::string> checks(check_list.begin(), check_list.end());
      Report rep = run_instance(inst, checks, cfg);
      Json header{{"command", "run"}, {"checks", Json(std::vector<std::string>(checks.begin(), checks.end()))}};
      emit(render(rep, cfg, header), out_path);
      return rep.exit_code();
    }
    if (*gen) {
      GenConfig gc;
      gc.jump_prob = jump_prob;
      std::vector<DCInstance> insts = random_instances(seed, count, gc);
      if (out_dir.empty()) {
        Json arr = Json::array();
        for (const auto& i : insts) arr.push_back(to_json(i));
        std::cout << arr.dump(2) << "\n";
      } else {
        std::filesystem::create_directories(out_dir);
        for (const auto& i : insts) emit(to_json(i).dump(2) + "\n", out_dir + "/" + i.name + ".json");
      }
      return kExitOk;
    }
  } catch (const Error& e) {
    std::cerr << "ecdc: " << e.what() << "\n";
    return e.code() == ErrorCode::kValidation ? kExitValidation : 1;
  }
  return kExitOk;
}
