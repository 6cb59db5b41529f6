// Acceptance run: one PASS/FAIL line per criterion, nonzero exit when any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "ecdc/cconj.hpp"
#include "ecdc/dc_duality.hpp"
#include "ecdc/dualsets.hpp"
#include "ecdc/instances.hpp"
#include "oracle.hpp"

using namespace ecdc;

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

void report(int id, const std::string& what, bool pass, const std::string& detail, double seconds) {
  std::printf("[%s] AC%-2d %-58s %s (%.2fs)\n", pass ? "PASS" : "FAIL", id, what.c_str(), detail.c_str(), seconds);
  std::fflush(stdout);
  if (!pass) ++failures;
}

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(const char* f, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

bool within(const ExtReal& v, double x, double tol) { return v.is_finite() && std::abs(v.value() - x) <= tol; }

const PropertyVerdict& find(const std::vector<PropertyVerdict>& vs, const std::string& name) {
  for (const PropertyVerdict& v : vs)
    if (v.property == name) return v;
  throw std::runtime_error("missing verdict " + name);
}

CheckConfig default_check() { return CheckConfig{}; }

// --- membership sweep against the brute-force oracle ------------------------

const double kOffsets[] = {-2.0, -1.0, -0.5, -0.25, -0.1, 0.0, 0.1, 0.25, 0.5, 1.0, 2.0};

struct Agreement {
  long total = 0;
  long agree = 0;
  long flagged = 0;     // disagreements answered UNCERTAIN
  long confident = 0;   // disagreements answered IN/OUT
  std::string first_bad;
};

void sweep(const SliceRay& ray, double oracle_value, const std::string& tag, Agreement& acc) {
  std::vector<double> betas;
  if (ray.threshold.is_finite()) {
    for (double o : kOffsets) betas.push_back(ray.threshold.value() + o);
  } else {
    for (int b = -5; b <= 5; ++b) betas.push_back(b);
  }
  for (double beta : betas) {
    const Membership m = membership(ray, 1.0, beta, 1e-6);
    const bool expect = oracle::member(oracle_value, beta, 1e-6);
    ++acc.total;
    if ((m == Membership::kIn) == expect && m != Membership::kUncertain) {
      ++acc.agree;
    } else if (m == Membership::kUncertain) {
      ++acc.flagged;
    } else {
      ++acc.confident;
      if (acc.first_bad.empty())
        acc.first_bad = fmt("%s beta=%.6g lib=%s oracle=%.9g", tag.c_str(), beta, to_string(m), oracle_value);
    }
  }
}

void sweep_instance(const DCInstance& inst, const SliceSet& s, Agreement& acc) {
  const double p = s.pstar;
  const std::string tag = inst.name + fmt(" p*=%g", p);
  sweep(s.epi, oracle::primal(inst, p), tag + " epi", acc);
  sweep(s.omega, oracle::dual_DF(inst, p), tag + " Omega", acc);
  sweep(s.k, oracle::dual_DbarF(inst, p), tag + " K", acc);
}

bool agreement_ok(const Agreement& a) {
  return a.total > 0 && a.confident == 0 && static_cast<double>(a.agree) >= 0.99 * static_cast<double>(a.total);
}

std::string agreement_detail(const Agreement& a) {
  std::string d = fmt("%ld/%ld agree, %ld flagged UNCERTAIN, %ld confident mismatches", a.agree, a.total, a.flagged,
                      a.confident);
  if (!a.first_bad.empty()) d += " [" + a.first_bad + "]";
  return d;
}

// ---------------------------------------------------------------------------

void ac1() {
  const auto t0 = Clock::now();
  const DCInstance inst = example_weak_fails();
  const CheckConfig cc = default_check();
  const SliceSet s = compute_slices(inst, 0.0, cc);
  const ExtReal bound = dual_DF_objective(inst, {0.0, 0.0, 1.0}, cc.search);
  const auto weak = check_weak_duality(s, cc.tol);
  const TheoremVerdict t = check_theorem_mixed(inst, 0.0, cc);
  const double secs = since(t0);
  const bool pass = s.vP.value == ExtReal(-1.0) && bound.is_finite() && bound.value() >= -1e-9 &&
                    within(s.vDF.value, 0.0, 1e-6) && find(weak, "weak_duality_DF").verdict == Verdict::kFails &&
                    classify(s.vP, s.vDF.value, s.vDF.attained(), cc.tol) == Classification::kWeakFails &&
                    t.outcome == TheoremOutcome::kHypothesisFails && secs < 1.0;
  report(1, "weak duality fails without e-convexity of g", pass,
         fmt("v(P)=%s, bound at (0,0,1)=%s, v(D^F)=%s, theorem %s", s.vP.value.to_string().c_str(),
             bound.to_string().c_str(), s.vDF.value.to_string().c_str(), to_string(t.outcome)),
         secs);
}

void ac2() {
  const auto t0 = Clock::now();
  const DCInstance inst = example_nonsolvable();
  const CheckConfig cc = default_check();
  const SliceSet s = compute_slices(inst, 0.0, cc);
  const auto gap = check_zero_gap(s, cc.tol);
  const auto strong = check_strong_duality(s, cc.tol);
  // The sup-inf objective stays below -1/(|x*|+1) on dom sigma_A = (-inf, 0].
  double worst = -1e300;
  for (int i = 0; i <= 400; ++i) {
    const double x = -std::pow(2.0, 0.1 * i - 10.0);
    const ExtReal v = dual_DF_objective(inst, {x, 0.0, 1.0}, cc.search);
    worst = std::max(worst, v.to_double() + 1.0 / (std::abs(x) + 1.0));
  }
  const double secs = since(t0);
  const bool pass = s.vP.value == ExtReal(0.0) && within(s.vDF.value, 0.0, 1e-6) &&
                    s.vDF.attainment == Attainment::kNotAttained && !s.omega.endpoint_included &&
                    s.epi.endpoint_included && find(gap, "zero_gap_DF").verdict == Verdict::kHolds &&
                    find(strong, "strong_duality_DF").verdict == Verdict::kFails && worst <= 1e-9 && secs < 10.0;
  report(2, "zero gap without dual solvability", pass,
         fmt("v(P)=%s, v(D^F)=%s %s, Omega %s, max excess over -1/(|x*|+1) %.2g", s.vP.value.to_string().c_str(),
             s.vDF.value.to_string().c_str(), to_string(s.vDF.attainment),
             s.omega.endpoint_included ? "closed" : "open", worst),
         secs);
}

void ac3() {
  const auto t0 = Clock::now();
  const DCInstance inst = example_hypothesis();
  const CheckConfig cc = default_check();
  const ValueReport vp = primal_value(inst);
  const TheoremVerdict t = check_theorem_mixed(inst, 0.0, cc);
  const std::vector<double> x0{0.0};
  const SampledFunction hull = eco_hull(inst.g, x0);
  const double secs = since(t0);
  const bool pass = vp.value == ExtReal(1.0) && t.hypothesis.relation == Relation::kEqual &&
                    within(t.hypothesis.left.threshold, -1.0, 1e-6) &&
                    within(t.hypothesis.right.threshold, -1.0, 1e-6) && within(hull.value[0], 0.0, 1e-6) &&
                    inst.g(0.0) == ExtReal(1.0) && t.outcome != TheoremOutcome::kViolated &&
                    t.outcome != TheoremOutcome::kUncertain;
  report(3, "hypothesis holds although g is not e-convex", pass,
         fmt("v(P)=%s, slices %s at %s, eco g(0)=%s, theorem %s", vp.value.to_string().c_str(),
             to_string(t.hypothesis.relation), t.hypothesis.left.threshold.to_string().c_str(),
             hull.value[0].to_string().c_str(), to_string(t.outcome)),
         secs);
}

void ac4() {
  const auto t0 = Clock::now();
  const SquareExample ex = example_square();
  const auto c = is_e_convex(ex.C, ex.exterior_C);
  const auto d = is_e_convex(ex.D, ex.dashed_edge);
  const long sep = std::count_if(c.begin(), c.end(), [](const SeparationReport& r) {
    return r.verdict == SeparationVerdict::kSeparated;
  });
  const bool blocked = !d.empty() && std::all_of(d.begin(), d.end(), [&](const SeparationReport& r) {
    return r.verdict == SeparationVerdict::kNotSeparated && r.blocking_point == ex.P;
  });
  const double secs = since(t0);
  const bool pass = c.size() >= 20 && sep == static_cast<long>(c.size()) && blocked;
  report(4, "half-open square e-convex, adding the corner breaks it", pass,
         fmt("%ld/%zu exterior points separated, %zu dashed-edge points blocked by P: %s", sep, c.size(), d.size(),
             blocked ? "yes" : "no"),
         secs);
}

struct Corpus {
  std::vector<DCInstance> smooth;   // jump-free
  std::vector<DCInstance> jumps;    // g with an upward end jump
  std::vector<SliceSet> smooth_slices;
  std::vector<SliceSet> jump_slices;
  double seconds = 0.0;
};

Corpus build_corpus() {
  const auto t0 = Clock::now();
  Corpus c;
  c.smooth = random_instances(2024, 100, GenConfig{0.0});
  c.jumps = random_instances(4049, 20, GenConfig{1.0});
  const CheckConfig cc = default_check();
  for (const auto& inst : c.smooth) c.smooth_slices.push_back(compute_slices(inst, 0.0, cc));
  for (const auto& inst : c.jumps) c.jump_slices.push_back(compute_slices(inst, 0.0, cc));
  c.seconds = since(t0);
  return c;
}

void ac5(const Corpus& c) {
  const auto t0 = Clock::now();
  Agreement acc;
  for (std::size_t i = 0; i < c.smooth.size(); ++i) sweep_instance(c.smooth[i], c.smooth_slices[i], acc);
  for (std::size_t i = 0; i < c.jumps.size(); ++i) sweep_instance(c.jumps[i], c.jump_slices[i], acc);
  const double secs = since(t0) + c.seconds;
  report(5, "slice membership against brute force (120 instances)", agreement_ok(acc) && secs < 300.0,
         agreement_detail(acc), secs);
}

void ac6(const Corpus& c) {
  const auto t0 = Clock::now();
  int ok = 0;
  std::string bad;
  for (const SliceSet& s : c.smooth_slices) {
    const double p = s.vP.value.to_double();
    const double b = s.vDbarF.value.value.to_double();
    const double f = s.vDF.value.to_double();
    const bool chain = p >= b - 1e-6 && b - 1e-6 >= f - 2e-6;
    ok += chain;
    if (!chain && bad.empty()) bad = fmt(" first violation: %g %g %g", p, b, f);
  }
  report(6, "v(P) >= v(DbarF) >= v(D^F) on jump-free instances", ok == static_cast<int>(c.smooth_slices.size()),
         fmt("%d/%zu%s", ok, c.smooth_slices.size(), bad.c_str()), since(t0));
}

bool closed_domain(const PiecewiseFunction& f) { return !f.domain().lo.is_open() && !f.domain().hi.is_open(); }

void ac7(const Corpus& c) {
  const auto t0 = Clock::now();
  std::vector<const PiecewiseFunction*> fs;
  for (const auto* set : {&c.smooth, &c.jumps}) {
    for (const DCInstance& inst : *set) {
      fs.push_back(&inst.f);
      fs.push_back(&inst.g);
    }
  }
  std::vector<double> xs;
  for (int i = -32; i <= 32; ++i) xs.push_back(0.125 * i);
  double worst_above = -1e300;
  double worst_error = 0.0;
  int checked = 0;
  for (const PiecewiseFunction* f : fs) {
    const SampledFunction h = eco_hull(*f, xs);
    const bool exact_case = f->is_piecewise_affine() && is_e_convex_function(*f) && closed_domain(*f);
    checked += exact_case;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const ExtReal fx = (*f)(xs[i]);
      if (!fx.is_finite()) continue;
      worst_above = std::max(worst_above, h.value[i].to_double() - fx.value());
      if (exact_case) worst_error = std::max(worst_error, std::abs(h.value[i].to_double() - fx.value()));
    }
  }
  report(7, "f^{cc'} <= f everywhere, = f for e-convex closed PA f", worst_above <= 1e-9 && worst_error <= 1e-4,
         fmt("%zu functions, max(f^{cc'} - f) = %.2g, max error on %d e-convex = %.2g", fs.size(), worst_above, checked,
             worst_error),
         since(t0));
}

void ac8(const Corpus& c) {
  const auto t0 = Clock::now();
  long checks = 0;
  long mismatches = 0;
  for (const auto* set : {&c.smooth_slices, &c.jump_slices}) {
    for (const SliceSet& s : *set) {
      for (const SliceRay* r : {&s.epi, &s.omega, &s.k}) {
        const double base = r->threshold.is_finite() ? r->threshold.value() : 0.0;
        for (double o : kOffsets) {
          const Membership m1 = membership(*r, 1.0, base + o, 1e-6);
          for (double delta : {0.1, 10.0}) {
            ++checks;
            mismatches += membership(*r, delta, base + o, 1e-6) != m1;
          }
        }
      }
    }
  }
  report(8, "membership independent of delta in {0.1, 1, 10}", checks > 0 && mismatches == 0,
         fmt("%ld comparisons, %ld mismatches", checks, mismatches), since(t0));
}

void ac9(const Corpus& c) {
  const auto t0 = Clock::now();
  int rows = 0;
  int agree = 0;
  int uncertain = 0;
  int fails = 0;
  for (const auto* set : {&c.smooth_slices, &c.jump_slices}) {
    for (const SliceSet& s : *set) {
      for (const PropertyVerdict& v : check_weak_duality(s, 1e-6)) {
        ++rows;
        if (v.verdict == Verdict::kUncertain || v.value_verdict == Verdict::kUncertain) {
          ++uncertain;
          continue;
        }
        agree += v.verdict == v.value_verdict && v.consistent;
        fails += v.verdict == Verdict::kFails;
      }
    }
  }
  report(9, "weak duality iff slice inclusion", agree + uncertain == rows && agree > 0,
         fmt("%d/%d verdicts agree (%d uncertain, %d weak-duality failures seen)", agree, rows, uncertain, fails),
         since(t0));
}

void ac10() {
  const auto t0 = Clock::now();
  GenConfig small;
  small.max_breaks = 1;
  small.lattice_span = 8;
  const auto insts = random_instances(77, 20, small);
  FullGrid grid;
  for (int i = -16; i <= 16; ++i) grid.xstar.push_back(0.25 * i);
  grid.ystar = {-1.0, -0.5, 0.0, 0.5, 1.0};
  grid.alpha = {-1.0, 0.25, 1.0, 4.0};
  int ok = 0;
  int finite = 0;
  double worst = 0.0;
  for (const DCInstance& inst : insts) {
    const ExtReal full = dual_DF_full_grid(inst, grid);
    const ExtReal collapsed = dual_DF_collapsed_grid(inst, grid.xstar);
    const bool same = near(full, collapsed, 1e-6);
    finite += full.is_finite();
    if (full.is_finite() && collapsed.is_finite())
      worst = std::max(worst, std::abs(full.value() - collapsed.value()));
    ok += same;
  }
  const double secs = since(t0);
  report(10, "six-variable dual equals the collapsed dual", ok == 20 && secs < 120.0,
         fmt("%d/20 within 1e-6 (%d finite, max diff %.2g, |W| = %zu)", ok, finite, worst,
             grid.xstar.size() * grid.ystar.size() * grid.alpha.size()),
         secs);
}

void ac11() {
  const auto t0 = Clock::now();
  const auto insts = random_instances(9001, 20, GenConfig{0.25});
  const CheckConfig cc = default_check();
  Agreement acc;
  for (const DCInstance& inst : insts) {
    for (double p : pstar_grid()) sweep_instance(inst, compute_slices(inst, p, cc), acc);
  }
  report(11, "perturbed slices (20 instances x 21 p*) against brute force", agreement_ok(acc),
         agreement_detail(acc), since(t0));
}

}  // namespace

int main() {
  const std::vector<std::function<void()>> early{ac1, ac2, ac3, ac4};
  for (const auto& f : early) {
    try {
      f();
    } catch (const std::exception& e) {
      std::printf("[FAIL] error: %s\n", e.what());
      ++failures;
    }
  }
  try {
    const Corpus c = build_corpus();
    ac5(c);
    ac6(c);
    ac7(c);
    ac8(c);
    ac9(c);
  } catch (const std::exception& e) {
    std::printf("[FAIL] AC5-9 error: %s\n", e.what());
    ++failures;
  }
  for (const auto& f : {ac10, ac11}) {
    try {
      f();
    } catch (const std::exception& e) {
      std::printf("[FAIL] error: %s\n", e.what());
      ++failures;
    }
  }
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
