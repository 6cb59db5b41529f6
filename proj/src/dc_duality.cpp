#include "ecdc/dc_duality.hpp"

#include <algorithm>
#include <cmath>

#include "ecdc/error.hpp"

namespace ecdc {

namespace {

const Piece& piece_at(const PiecewiseFunction& h, double x) {
  for (const Piece& p : h.pieces()) {
    if (!p.is_point() && p.dom.contains(x)) return p;
  }
  throw Error(ErrorCode::kValidation, "no formula piece covers x = " + std::to_string(x));
}

void push_finite_ends(std::vector<double>& out, const Interval& dom) {
  if (!dom.lo.is_unbounded()) out.push_back(dom.lo.at);
  if (!dom.hi.is_unbounded()) out.push_back(dom.hi.at);
}

// Slopes of h and finite ends of dom h*: every kink of h* and every point
// where h* changes between finite and +inf.
std::vector<double> conj_kinks(const PiecewiseFunction& h) {
  std::vector<double> out = h.slopes();
  push_finite_ends(out, conj_domain(h).fdom);
  return out;
}

ValueReport from_extremum(const Extremum& e) {
  ValueReport r;
  r.value = e.value;
  r.attainment = e.attained ? Attainment::kAttained : Attainment::kNotAttained;
  if (e.attained) r.witness = e.arg;
  r.method = Method::kExact;
  return r;
}

ValueReport from_search(const SearchResult& s, bool exact) {
  ValueReport r;
  r.value = s.value;
  r.attainment = s.attainment;
  r.witness = s.arg;
  if (s.arg) r.witness_w = WPoint{*s.arg, 0.0, 1.0};
  r.tail = s.tail;
  r.method = exact && s.attainment != Attainment::kUncertain ? Method::kExact : Method::kGrid;
  return r;
}

// Inner problems run serially inside the parallel outer sweep. Their grid is
// coarser; golden-section refinement recovers the accuracy on smooth pieces.
SearchConfig inner_config(SearchConfig cfg) {
  cfg.exec = Exec::kSerial;
  cfg.points = std::max(257, (cfg.points - 1) / 8 + 1);
  return cfg;
}

bool piecewise_affine(const DCInstance& inst) {
  return inst.f.is_piecewise_affine() && inst.g.is_piecewise_affine();
}

// Conjugate data shared by both duals.
struct DualData {
  PiecewiseFunction sigma_src;
  ConjDomain cf;
  ConjDomain cg;
  ConjDomain ca;
  std::vector<double> kf;
  std::vector<double> kg;
  bool exact;

  explicit DualData(const DCInstance& inst)
      : sigma_src(PiecewiseFunction::indicator(inst.A)),
        cf(conj_domain(inst.f)),
        cg(conj_domain(inst.g)),
        ca(conj_domain(sigma_src)),
        kf(conj_kinks(inst.f)),
        kg(conj_kinks(inst.g)),
        exact(piecewise_affine(inst)) {}

  Sampling inner_sampling() const { return exact ? Sampling::kCriticalOnly : Sampling::kGrid; }
};

}  // namespace

void DCInstance::validate() const {
  if (A.empty()) throw Error(ErrorCode::kValidation, "constraint set A is empty");
  if (!includes(g.domain(), f.domain())) {
    throw Error(ErrorCode::kValidation,
                "dom f " + f.domain().to_string() + " is not contained in dom g " + g.domain().to_string());
  }
}

const char* to_string(Method m) { return m == Method::kExact ? "exact" : "grid"; }

const char* to_string(Classification c) {
  switch (c) {
    case Classification::kWeakFails: return "WEAK_FAILS";
    case Classification::kWeakOnly: return "WEAK_ONLY";
    case Classification::kZeroGap: return "ZERO_GAP";
    case Classification::kStrong: return "STRONG";
  }
  return "?";
}

ValueReport primal_value(const DCInstance& inst, double pstar) {
  const Interval dom = intersect(inst.f.domain(), inst.A);
  if (dom.empty()) {
    ValueReport r;
    r.value = ExtReal::pos_inf();
    r.attainment = Attainment::kNotAttained;
    return r;
  }
  std::vector<double> cuts = inst.f.breakpoints();
  for (double b : inst.g.breakpoints()) cuts.push_back(b);
  push_finite_ends(cuts, inst.A);
  std::erase_if(cuts, [&](double b) { return !(b > dom.lo_value() && b < dom.hi_value()); });
  push_finite_ends(cuts, dom);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<Bound> edges;
  edges.push_back(dom.lo.is_unbounded() ? Bound::unbounded() : Bound::open(dom.lo.at));
  for (double b : cuts) {
    if (b > dom.lo_value() && b < dom.hi_value()) edges.push_back(Bound::open(b));
  }
  edges.push_back(dom.hi.is_unbounded() ? Bound::unbounded() : Bound::open(dom.hi.at));

  const Curve tilt{pstar, 0.0, 0.0};
  Extremum best{ExtReal::pos_inf(), false, std::nullopt};
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    Interval cell{edges[i], edges[i + 1]};
    if (cell.empty()) continue;
    double m = cell.representative();
    Curve q = piece_at(inst.f, m).curve() - piece_at(inst.g, m).curve() + tilt;
    best = merge_inf(best, inf_on(q, cell));
  }
  for (double b : cuts) {
    if (!dom.contains(b)) continue;
    ExtReal v = add_conj(sub_dc(inst.f(b), inst.g(b)), ExtReal(pstar * b));
    best = merge_inf(best, Extremum{v, true, b});
  }
  ValueReport r = from_extremum(best);
  if (!best.value.is_finite()) r.attainment = best.attained ? Attainment::kAttained : Attainment::kNotAttained;
  return r;
}

ValueReport dual_DF_value(const DCInstance& inst, const SearchConfig& cfg, double pstar) {
  cfg.validate();
  const DualData d(inst);
  const SearchConfig inner_cfg = inner_config(cfg);

  ScalarFn phi = [&](double x) -> ExtReal {
    ExtReal sa = fenchel_conjugate(d.sigma_src, x).value;
    if (!sa.is_finite()) return ExtReal::neg_inf();
    // Some u* in dom g* makes f*(u* - x* - p*) infinite: the inner inf is -inf.
    if (!includes(shifted(d.cf.fdom, x + pstar), d.cg.fdom)) return ExtReal::neg_inf();
    std::vector<double> crit = d.kg;
    for (double s : d.kf) crit.push_back(x + pstar + s);
    ScalarFn inner = [&](double u) {
      return sub_conj(fenchel_conjugate(inst.g, u).value, fenchel_conjugate(inst.f, u - x - pstar).value);
    };
    SearchResult r = minimize(inner, d.cg.fdom, crit, inner_cfg, d.inner_sampling());
    return sub_conj(r.value, sa);
  };

  std::vector<double> crit{0.0};
  for (double c : d.kg) {
    for (double s : d.kf) crit.push_back(c - s - pstar);
  }
  SearchResult r = maximize(phi, d.ca.fdom, crit, cfg, Sampling::kGrid);
  return from_search(r, d.exact);
}

ExtReal dual_DF_objective(const DCInstance& inst, const WPoint& outer, const SearchConfig& cfg, double pstar) {
  cfg.validate();
  const DualData d(inst);
  const ExtReal da = c_conjugate(d.sigma_src, outer).value;
  if (da.is_pos_inf()) return ExtReal::neg_inf();
  const WPoint fw{0.0, -outer.ystar, outer.alpha};
  if (!halfspace_gate(inst.f.domain(), fw.ystar, fw.alpha)) return ExtReal::neg_inf();
  if (!includes(shifted(d.cf.fdom, outer.xstar + pstar), d.cg.fdom)) return ExtReal::neg_inf();
  std::vector<double> crit = d.kg;
  for (double s : d.kf) crit.push_back(outer.xstar + pstar + s);
  ScalarFn inner = [&](double u) {
    return sub_conj(fenchel_conjugate(inst.g, u).value, fenchel_conjugate(inst.f, u - outer.xstar - pstar).value);
  };
  SearchResult r = minimize(inner, d.cg.fdom, crit, inner_config(cfg), d.inner_sampling());
  return sub_conj(r.value, da);
}

DbarFReport dual_DbarF_value(const DCInstance& inst, const SearchConfig& cfg, double pstar) {
  cfg.validate();
  const DualData d(inst);
  const SearchConfig inner_cfg = inner_config(cfg);

  auto detail = [&](double u) -> OuterSample {
    ExtReal gs = fenchel_conjugate(inst.g, u).value;
    if (!gs.is_finite()) return {u, ExtReal::pos_inf(), true};
    Interval dom = intersect(d.ca.fdom, reflected(d.cf.fdom, u - pstar));
    if (dom.empty()) return {u, ExtReal::neg_inf(), false};
    std::vector<double> crit{0.0};
    for (double s : d.kf) crit.push_back(u - pstar - s);
    ScalarFn inner = [&](double x) {
      return add_conj(-fenchel_conjugate(inst.f, u - x - pstar).value, -fenchel_conjugate(d.sigma_src, x).value);
    };
    SearchResult r = maximize(inner, dom, crit, inner_cfg, d.inner_sampling());
    return {u, add_conj(gs, r.value), r.attainment == Attainment::kAttained};
  };

  std::vector<double> crit = d.kg;
  std::vector<double> shifts{0.0};
  push_finite_ends(shifts, d.ca.fdom);
  for (double s : d.kf) {
    for (double e : shifts) crit.push_back(s + e + pstar);
  }

  ScalarFn psi = [&](double u) { return detail(u).value; };
  SearchResult r = minimize(psi, d.cg.fdom, crit, cfg, Sampling::kGrid);

  DbarFReport out;
  out.value = from_search(r, d.exact);
  std::vector<double> pts = search_points(d.cg.fdom, crit, cfg, Sampling::kGrid);
  if (r.arg && std::find(pts.begin(), pts.end(), *r.arg) == pts.end()) {
    pts.insert(std::upper_bound(pts.begin(), pts.end(), *r.arg), *r.arg);
  }
  out.outer = map_index<OuterSample>(pts.size(), [&](std::size_t i) { return detail(pts[i]); }, cfg.exec);
  return out;
}

PerturbedValues perturbed_values(const DCInstance& inst, double pstar, const SearchConfig& cfg) {
  return {pstar, primal_value(inst, pstar), dual_DF_value(inst, cfg, pstar), dual_DbarF_value(inst, cfg, pstar)};
}

DCInstance p0_instance(const PiecewiseFunction& f, const Interval& A) {
  return {f, PiecewiseFunction::affine(0.0, 0.0), A, "p0"};
}

P0D0Values p0_d0_values(const PiecewiseFunction& f, const Interval& A, const SearchConfig& cfg, double pstar) {
  DCInstance inst = p0_instance(f, A);
  inst.validate();
  return {primal_value(inst, pstar), dual_DF_value(inst, cfg, pstar)};
}

bool DbarFReport::inner_solvable(double tol) const {
  const ExtReal& v = value.value;
  if (!v.is_finite()) return true;
  return std::all_of(outer.begin(), outer.end(), [&](const OuterSample& o) {
    if (!o.value.is_finite()) return o.value.is_pos_inf();
    if (o.value.value() > v.value() + tol) return true;
    return o.inner_attained;
  });
}

Classification classify(const ValueReport& primal, const ExtReal& q, bool dual_solvable, double tol) {
  const ExtReal& p = primal.value;
  if (p.is_neg_inf()) return q.is_neg_inf() ? Classification::kStrong : Classification::kWeakFails;
  bool above = (p.is_finite() && q.is_finite()) ? q.value() > p.value() + tol : p < q;
  if (above) return Classification::kWeakFails;
  if (near(p, q, tol)) return dual_solvable ? Classification::kStrong : Classification::kZeroGap;
  return Classification::kWeakOnly;
}

DualityReport duality_report(const DCInstance& inst, const SearchConfig& cfg, double pstar, double tol) {
  DualityReport r;
  r.vP = primal_value(inst, pstar);
  r.vDF = dual_DF_value(inst, cfg, pstar);
  DbarFReport db = dual_DbarF_value(inst, cfg, pstar);
  r.vDbarF = db.value;
  r.df = classify(r.vP, r.vDF.value, r.vDF.attained(), tol);
  r.dbarf = classify(r.vP, r.vDbarF.value, db.inner_solvable(tol), tol);
  r.g_e_convex = is_e_convex_function(inst.g, cfg.tol);
  return r;
}

ExtReal dual_DF_full_grid(const DCInstance& inst, const FullGrid& grid, double pstar, Exec exec) {
  const PiecewiseFunction sa = PiecewiseFunction::indicator(inst.A);
  std::vector<WPoint> ws;
  for (double x : grid.xstar) {
    for (double y : grid.ystar) {
      for (double a : grid.alpha) ws.push_back({x, y, a});
    }
  }
  std::vector<ExtReal> gc(ws.size());
  for (std::size_t i = 0; i < ws.size(); ++i) gc[i] = c_conjugate(inst.g, ws[i]).value;

  std::vector<ExtReal> outer = map_index<ExtReal>(
      ws.size(),
      [&](std::size_t i) {
        const WPoint& w = ws[i];
        ExtReal da = c_conjugate(sa, w).value;
        if (da.is_pos_inf()) return ExtReal::neg_inf();  // outside dom delta_A^c
        ExtReal best = ExtReal::pos_inf();
        for (std::size_t j = 0; j < ws.size(); ++j) {
          if (gc[j].is_pos_inf()) continue;  // outside dom g^c
          ExtReal fc = c_conjugate(inst.f, {ws[j].xstar - w.xstar - pstar, -w.ystar, w.alpha}).value;
          best = min(best, sub_conj(sub_conj(gc[j], fc), da));
        }
        return best;
      },
      exec);
  ExtReal v = ExtReal::neg_inf();
  for (const ExtReal& o : outer) v = max(v, o);
  return v;
}

ExtReal dual_DF_collapsed_grid(const DCInstance& inst, std::span<const double> xstar, double pstar) {
  const PiecewiseFunction sa = PiecewiseFunction::indicator(inst.A);
  ExtReal v = ExtReal::neg_inf();
  for (double x : xstar) {
    ExtReal s = fenchel_conjugate(sa, x).value;
    if (s.is_pos_inf()) continue;
    ExtReal inner = ExtReal::pos_inf();
    for (double u : xstar) {
      ExtReal gs = fenchel_conjugate(inst.g, u).value;
      if (gs.is_pos_inf()) continue;
      inner = min(inner, sub_conj(gs, fenchel_conjugate(inst.f, u - x - pstar).value));
    }
    v = max(v, sub_conj(inner, s));
  }
  return v;
}

ValueReport eco_gap_value(const DCInstance& inst, const SearchConfig& cfg, double pstar) {
  cfg.validate();
  std::optional<PiecewiseFunction> fa = inst.f.restricted_to(inst.A);
  if (!fa) {
    ValueReport r;
    r.value = ExtReal::neg_inf();
    return r;
  }
  const ConjDomain cg = conj_domain(inst.g);
  std::vector<double> crit = conj_kinks(inst.g);
  for (double s : conj_kinks(*fa)) crit.push_back(s + pstar);
  ScalarFn fn = [&](double u) {
    return sub_conj(fenchel_conjugate(*fa, u - pstar).value, fenchel_conjugate(inst.g, u).value);
  };
  const bool exact = piecewise_affine(inst);
  SearchResult r = maximize(fn, cg.fdom, crit, cfg, exact ? Sampling::kCriticalOnly : Sampling::kGrid);
  return from_search(r, exact);
}

}  // namespace ecdc
