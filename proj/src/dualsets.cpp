#include "ecdc/dualsets.hpp"

#include <algorithm>
#include <cmath>

#include "ecdc/error.hpp"

namespace ecdc {

namespace {

bool at_least(const ExtReal& a, const ExtReal& b, double tol) {
  if (a.is_finite() && b.is_finite()) return a.value() >= b.value() - tol;
  return !(a < b);
}

Verdict from_bool(bool b) { return b ? Verdict::kHolds : Verdict::kFails; }

Verdict inclusion_verdict(Relation r) {
  switch (r) {
    case Relation::kEqual:
    case Relation::kStrictSubset: return Verdict::kHolds;
    case Relation::kStrictSuperset: return Verdict::kFails;
    case Relation::kIncomparable: return Verdict::kUncertain;
  }
  return Verdict::kUncertain;
}

Verdict equality_verdict(Relation r) {
  if (r == Relation::kEqual) return Verdict::kHolds;
  if (r == Relation::kIncomparable) return Verdict::kUncertain;
  return Verdict::kFails;
}

Verdict both(Verdict a, Verdict b) {
  if (a == Verdict::kFails || b == Verdict::kFails) return Verdict::kFails;
  if (a == Verdict::kUncertain || b == Verdict::kUncertain) return Verdict::kUncertain;
  return Verdict::kHolds;
}

PropertyVerdict make(const std::string& property, double pstar, SliceComparison cmp, Verdict slices, Verdict values) {
  PropertyVerdict v;
  v.property = property;
  v.pstar = pstar;
  v.comparison = std::move(cmp);
  v.verdict = slices;
  v.value_verdict = values;
  v.consistent = slices == Verdict::kUncertain || values == Verdict::kUncertain || slices == values;
  return v;
}

std::string describe(Relation r) {
  switch (r) {
    case Relation::kEqual: return "left = right";
    case Relation::kStrictSubset: return "left strictly inside right";
    case Relation::kStrictSuperset: return "right strictly inside left";
    case Relation::kIncomparable: return "undecided: an uncertain endpoint sits on a tied threshold";
  }
  return "";
}

}  // namespace

const char* to_string(Certainty c) {
  switch (c) {
    case Certainty::kExact: return "EXACT";
    case Certainty::kGridCertified: return "GRID_CERTIFIED";
    case Certainty::kUncertain: return "UNCERTAIN";
  }
  return "?";
}

const char* to_string(Membership m) {
  switch (m) {
    case Membership::kIn: return "IN";
    case Membership::kOut: return "OUT";
    case Membership::kUncertain: return "UNCERTAIN";
  }
  return "?";
}

const char* to_string(Relation r) {
  switch (r) {
    case Relation::kEqual: return "EQUAL";
    case Relation::kStrictSubset: return "STRICT_SUBSET";
    case Relation::kStrictSuperset: return "STRICT_SUPERSET";
    case Relation::kIncomparable: return "INCOMPARABLE";
  }
  return "?";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kHolds: return "HOLDS";
    case Verdict::kFails: return "FAILS";
    case Verdict::kUncertain: return "UNCERTAIN";
  }
  return "?";
}

const char* to_string(TheoremOutcome o) {
  switch (o) {
    case TheoremOutcome::kHypothesisFails: return "HYPOTHESIS_FAILS";
    case TheoremOutcome::kEquivalent: return "EQUIVALENT";
    case TheoremOutcome::kViolated: return "VIOLATED";
    case TheoremOutcome::kUncertain: return "UNCERTAIN";
  }
  return "?";
}

Membership membership(const SliceRay& ray, double delta, double beta, double tol) {
  if (!(delta > 0.0)) return Membership::kOut;
  if (ray.threshold.is_pos_inf()) return Membership::kOut;
  if (ray.threshold.is_neg_inf()) return Membership::kIn;
  const double diff = beta - ray.threshold.value();
  if (diff > tol) return Membership::kIn;
  if (diff < -tol) return Membership::kOut;
  if (ray.certainty != Certainty::kExact) return Membership::kUncertain;
  return ray.endpoint_included ? Membership::kIn : Membership::kOut;
}

bool ray_subset(const SliceRay& r1, const SliceRay& r2, double tol) {
  const ExtReal& t1 = r1.threshold;
  const ExtReal& t2 = r2.threshold;
  if (t1.is_pos_inf() || t2.is_neg_inf()) return true;
  if (t2.is_pos_inf() || t1.is_neg_inf()) return false;
  if (t1.value() > t2.value() + tol) return true;
  if (t1.value() < t2.value() - tol) return false;
  return r2.endpoint_included || !r1.endpoint_included;
}

SliceComparison compare(const SliceRay& left, const SliceRay& right, double tol) {
  SliceComparison c{left, right, Relation::kIncomparable, ""};
  const bool tied = near(left.threshold, right.threshold, tol) && left.threshold.is_finite();
  const bool unsure = left.certainty == Certainty::kUncertain || right.certainty == Certainty::kUncertain;
  if (!(tied && unsure)) {
    const bool sub = ray_subset(left, right, tol);
    const bool sup = ray_subset(right, left, tol);
    c.relation = sub && sup ? Relation::kEqual : sub ? Relation::kStrictSubset
                                            : sup ? Relation::kStrictSuperset
                                                  : Relation::kIncomparable;
  }
  c.interpretation = describe(c.relation);
  return c;
}

Certainty certainty_of(const ValueReport& r) {
  if (r.attainment == Attainment::kUncertain) return Certainty::kUncertain;
  return r.method == Method::kExact ? Certainty::kExact : Certainty::kGridCertified;
}

SliceRay epi_slice_from(const ValueReport& vP, double pstar) {
  return {pstar, -vP.value, true, certainty_of(vP)};
}

SliceRay omega_slice_from(const ValueReport& vDF, double pstar) {
  return {pstar, -vDF.value, vDF.attained(), certainty_of(vDF)};
}

SliceRay k_slice_from(const DbarFReport& vDbarF, double pstar, double tol) {
  return {pstar, -vDbarF.value.value, vDbarF.inner_solvable(tol), certainty_of(vDbarF.value)};
}

SliceRay epi_slice(const DCInstance& inst, double pstar) { return epi_slice_from(primal_value(inst, pstar), pstar); }

SliceRay omega_slice(const DCInstance& inst, double pstar, const CheckConfig& cfg) {
  return omega_slice_from(dual_DF_value(inst, cfg.search, pstar), pstar);
}

SliceRay k_slice(const DCInstance& inst, double pstar, const CheckConfig& cfg) {
  return k_slice_from(dual_DbarF_value(inst, cfg.search, pstar), pstar, cfg.tol);
}

LambdaSlice lambda_slice(const DCInstance& inst, double pstar, const CheckConfig& cfg) {
  LambdaSlice out;
  ValueReport direct = eco_gap_value(inst, cfg.search, pstar);
  out.direct = {pstar, direct.value, true, certainty_of(direct)};

  const PiecewiseFunction hull = eco_hull_symbolic(inst.g);
  DCInstance relaxed{inst.f, hull, inst.A, inst.name + "+eco"};
  out.ray = epi_slice_from(primal_value(relaxed, pstar), pstar);

  // The symbolic hull against the sampled f^{cc'} at the breakpoints of g and
  // one interior point per piece.
  std::vector<double> xs = inst.g.breakpoints();
  for (const Piece& p : inst.g.pieces()) xs.push_back(p.dom.representative());
  std::erase_if(xs, [&](double x) { return !inst.g.domain().contains(x); });
  WGridConfig wcfg{cfg.search.box_lo, cfg.search.box_hi, cfg.search.points};
  SampledFunction sampled = eco_hull(inst.g, xs, wcfg, cfg.search.exec);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    ExtReal h = hull(xs[i]);
    const ExtReal& s = sampled.value[i];
    double err = (h.is_finite() && s.is_finite()) ? std::abs(h.value() - s.value())
                 : h == s                         ? 0.0
                                                  : std::numeric_limits<double>::infinity();
    out.hull_error = std::max(out.hull_error, err);
  }

  out.disagreement = !near(out.direct.threshold, out.ray.threshold, cfg.tol) || out.hull_error > cfg.tol;
  if (out.disagreement) out.ray.certainty = Certainty::kUncertain;
  return out;
}

SliceSet compute_slices(const DCInstance& inst, double pstar, const CheckConfig& cfg) {
  SliceSet s;
  s.pstar = pstar;
  s.vP = primal_value(inst, pstar);
  s.vDF = dual_DF_value(inst, cfg.search, pstar);
  s.vDbarF = dual_DbarF_value(inst, cfg.search, pstar);
  s.epi = epi_slice_from(s.vP, pstar);
  s.omega = omega_slice_from(s.vDF, pstar);
  s.k = k_slice_from(s.vDbarF, pstar, cfg.tol);
  return s;
}

std::vector<PropertyVerdict> check_weak_duality(const SliceSet& s, double tol) {
  std::vector<PropertyVerdict> out;
  SliceComparison c1 = compare(s.omega, s.epi, tol);
  Verdict v1 = inclusion_verdict(c1.relation);
  out.push_back(make("weak_duality_DF", s.pstar, std::move(c1), v1, from_bool(at_least(s.vP.value, s.vDF.value, tol))));
  SliceComparison c2 = compare(s.k, s.epi, tol);
  Verdict v2 = inclusion_verdict(c2.relation);
  out.push_back(make("weak_duality_DbarF", s.pstar, std::move(c2), v2,
                     from_bool(at_least(s.vP.value, s.vDbarF.value.value, tol))));
  return out;
}

std::vector<PropertyVerdict> check_zero_gap(const SliceSet& s, double tol) {
  std::vector<PropertyVerdict> out;
  const std::pair<const char*, const SliceRay*> rays[] = {{"zero_gap_DF", &s.omega}, {"zero_gap_DbarF", &s.k}};
  const ExtReal* values[] = {&s.vDF.value, &s.vDbarF.value.value};
  for (int i = 0; i < 2; ++i) {
    SliceComparison c = compare(*rays[i].second, s.epi, tol);
    Verdict slices = from_bool(near(rays[i].second->threshold, s.epi.threshold, tol));
    out.push_back(make(rays[i].first, s.pstar, std::move(c), slices, from_bool(near(s.vP.value, *values[i], tol))));
  }
  return out;
}

std::vector<PropertyVerdict> check_strong_duality(const SliceSet& s, double tol) {
  auto value_side = [&](const ExtReal& v, Verdict solvable) {
    if (s.vP.value.is_neg_inf()) return from_bool(v.is_neg_inf());
    if (!near(s.vP.value, v, tol)) return Verdict::kFails;
    return solvable;
  };
  Verdict df_solvable = s.vDF.attainment == Attainment::kUncertain ? Verdict::kUncertain : from_bool(s.vDF.attained());
  Verdict dbar_solvable = s.vDbarF.value.attainment == Attainment::kUncertain
                              ? Verdict::kUncertain
                              : from_bool(s.vDbarF.inner_solvable(tol));

  std::vector<PropertyVerdict> out;
  SliceComparison c1 = compare(s.omega, s.epi, tol);
  Verdict v1 = equality_verdict(c1.relation);
  out.push_back(make("strong_duality_DF", s.pstar, std::move(c1), v1, value_side(s.vDF.value, df_solvable)));
  SliceComparison c2 = compare(s.k, s.epi, tol);
  Verdict v2 = equality_verdict(c2.relation);
  out.push_back(make("strong_duality_DbarF", s.pstar, std::move(c2), v2, value_side(s.vDbarF.value.value, dbar_solvable)));
  return out;
}

PropertyVerdict check_p0_d0_strong(const PiecewiseFunction& f, const Interval& A, double pstar,
                                   const CheckConfig& cfg) {
  const DCInstance inst = p0_instance(f, A);
  inst.validate();
  const ValueReport vP0 = primal_value(inst, pstar);
  const SliceRay epi = epi_slice_from(vP0, pstar);

  // Union over dom delta_A^c of closed rays starting at f*(-x* - p*) + sigma_A(x*).
  const PiecewiseFunction sa = PiecewiseFunction::indicator(A);
  std::vector<double> crit{0.0};
  for (double s : f.slopes()) crit.push_back(-s - pstar);
  const ConjDomain cf = conj_domain(f);
  if (!cf.fdom.lo.is_unbounded()) crit.push_back(-cf.fdom.lo.at - pstar);
  if (!cf.fdom.hi.is_unbounded()) crit.push_back(-cf.fdom.hi.at - pstar);
  ScalarFn member = [&](double x) {
    return add_conj(-fenchel_conjugate(f, -x - pstar).value, -fenchel_conjugate(sa, x).value);
  };
  SearchResult sweep = maximize(member, conj_domain(sa).fdom, crit, cfg.search, Sampling::kGrid);
  ValueReport sweep_report;
  sweep_report.value = sweep.value;
  sweep_report.attainment = sweep.attainment;
  sweep_report.method = f.is_piecewise_affine() && sweep.attainment != Attainment::kUncertain ? Method::kExact
                                                                                               : Method::kGrid;
  const SliceRay uni = omega_slice_from(sweep_report, pstar);

  const ValueReport vD0 = dual_DF_value(inst, cfg.search, pstar);
  Verdict values;
  if (vP0.value.is_neg_inf()) {
    values = from_bool(vD0.value.is_neg_inf());
  } else if (!near(vP0.value, vD0.value, cfg.tol)) {
    values = Verdict::kFails;
  } else {
    values = vD0.attainment == Attainment::kUncertain ? Verdict::kUncertain : from_bool(vD0.attained());
  }
  SliceComparison c = compare(uni, epi, cfg.tol);
  Verdict slices = equality_verdict(c.relation);
  PropertyVerdict v = make("strong_duality_P0D0", pstar, std::move(c), slices, values);
  // The union sweep and the dual evaluator compute the same number two ways.
  if (!near(sweep.value, vD0.value, cfg.tol)) v.consistent = false;
  return v;
}

StableVerdict check_p0_d0_stable(const PiecewiseFunction& f, const Interval& A, std::span<const double> pstars,
                                 const CheckConfig& cfg) {
  StableVerdict out;
  out.property = "stable_strong_duality_P0D0";
  out.rows = map_index<PropertyVerdict>(
      pstars.size(), [&](std::size_t i) { return check_p0_d0_strong(f, A, pstars[i], cfg); }, cfg.search.exec);
  for (const PropertyVerdict& r : out.rows) {
    if (r.verdict == Verdict::kFails) out.violators.push_back(r.pstar);
    if (r.verdict == Verdict::kUncertain) out.uncertain = true;
  }
  return out;
}

TheoremVerdict check_theorem_mixed(const DCInstance& inst, double pstar, const CheckConfig& cfg) {
  TheoremVerdict t;
  t.pstar = pstar;
  const SliceSet s = compute_slices(inst, pstar, cfg);
  const LambdaSlice lam = lambda_slice(inst, pstar, cfg);
  t.lambda_disagreement = lam.disagreement;
  t.hypothesis = compare(s.epi, lam.ray, cfg.tol);

  auto strong = check_strong_duality(s, cfg.tol);
  t.clause_i = strong[0].verdict;
  t.clause_ii = both(strong[1].verdict, equality_verdict(compare(s.omega, s.k, cfg.tol).relation));

  if (t.hypothesis.relation == Relation::kIncomparable) {
    t.outcome = TheoremOutcome::kUncertain;
  } else if (t.hypothesis.relation != Relation::kEqual) {
    t.outcome = TheoremOutcome::kHypothesisFails;
  } else if (t.clause_i == Verdict::kUncertain || t.clause_ii == Verdict::kUncertain) {
    t.outcome = TheoremOutcome::kUncertain;
  } else {
    t.outcome = t.clause_i == t.clause_ii ? TheoremOutcome::kEquivalent : TheoremOutcome::kViolated;
  }
  return t;
}

StableTheoremVerdict check_theorem_mixed_stable(const DCInstance& inst, std::span<const double> pstars,
                                                const CheckConfig& cfg) {
  StableTheoremVerdict out;
  out.rows = map_index<TheoremVerdict>(
      pstars.size(), [&](std::size_t i) { return check_theorem_mixed(inst, pstars[i], cfg); }, cfg.search.exec);
  for (const TheoremVerdict& r : out.rows) {
    if (r.outcome == TheoremOutcome::kViolated) out.violators.push_back(r.pstar);
    if (r.outcome == TheoremOutcome::kHypothesisFails) out.hypothesis_fails.push_back(r.pstar);
  }
  return out;
}

std::vector<double> pstar_grid(double lo, double hi, int n) {
  if (n < 1 || !(lo <= hi)) throw Error(ErrorCode::kValidation, "p* grid needs n >= 1 and lo <= hi");
  std::vector<double> out;
  if (n == 1) return {lo};
  for (int i = 0; i < n; ++i) out.push_back(lo + (hi - lo) * i / (n - 1));
  return out;
}

}  // namespace ecdc
