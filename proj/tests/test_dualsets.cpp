#include <doctest.h>

#include <cmath>

#include "ecdc/dualsets.hpp"
#include "ecdc/instances.hpp"

using namespace ecdc;

namespace {

SliceRay ray(ExtReal t, bool incl, Certainty c = Certainty::kExact) { return {0.0, t, incl, c}; }

// Brute-force subset test of two rays on a fine beta grid around both thresholds.
bool subset_by_points(const SliceRay& a, const SliceRay& b) {
  for (int i = -400; i <= 400; ++i) {
    const double beta = 0.01 * i;
    if (membership(a, 1.0, beta, 1e-9) == Membership::kIn && membership(b, 1.0, beta, 1e-9) != Membership::kIn)
      return false;
  }
  return true;
}

}  // namespace

TEST_CASE("membership") {
  const SliceRay r = ray(ExtReal(1.0), false);
  CHECK(membership(r, 1.0, 1.5, 1e-6) == Membership::kIn);
  CHECK(membership(r, 1.0, 1.0, 1e-6) == Membership::kOut);
  CHECK(membership(r, 1.0, 0.5, 1e-6) == Membership::kOut);
  CHECK(membership(r, 0.0, 1.5, 1e-6) == Membership::kOut);  // delta must be positive
  CHECK(membership(ray(ExtReal(1.0), true), 1.0, 1.0, 1e-6) == Membership::kIn);
  CHECK(membership(ray(ExtReal::neg_inf(), false), 1.0, -1e9, 1e-6) == Membership::kIn);
  CHECK(membership(ray(ExtReal::pos_inf(), true), 1.0, 1e9, 1e-6) == Membership::kOut);
  const SliceRay g = ray(ExtReal(1.0), true, Certainty::kGridCertified);
  CHECK(membership(g, 1.0, 1.0, 1e-6) == Membership::kUncertain);
  CHECK(membership(g, 1.0, 1.1, 1e-6) == Membership::kIn);
}

TEST_CASE("membership does not depend on delta") {
  for (const SliceRay& r : {ray(ExtReal(0.3), true), ray(ExtReal(-2.0), false), ray(ExtReal::neg_inf(), true)}) {
    for (int i = -30; i <= 30; ++i) {
      const double beta = 0.1 * i;
      const Membership m = membership(r, 1.0, beta, 1e-6);
      CHECK(membership(r, 0.1, beta, 1e-6) == m);
      CHECK(membership(r, 10.0, beta, 1e-6) == m);
    }
  }
}

TEST_CASE("ray algebra agrees with pointwise inclusion") {
  const ExtReal ts[] = {ExtReal::neg_inf(), ExtReal(-1.0), ExtReal(0.0), ExtReal(0.5), ExtReal::pos_inf()};
  for (const ExtReal& t1 : ts) {
    for (const ExtReal& t2 : ts) {
      for (bool i1 : {false, true}) {
        for (bool i2 : {false, true}) {
          const SliceRay a = ray(t1, i1);
          const SliceRay b = ray(t2, i2);
          CHECK(ray_subset(a, b, 1e-9) == subset_by_points(a, b));
          const Relation rel = compare(a, b, 1e-9).relation;
          const bool ab = subset_by_points(a, b);
          const bool ba = subset_by_points(b, a);
          const Relation expect = ab && ba ? Relation::kEqual
                                  : ab     ? Relation::kStrictSubset
                                  : ba     ? Relation::kStrictSuperset
                                           : Relation::kIncomparable;
          // Infinite thresholds ignore the endpoint flag.
          if (t1.is_finite() || t2.is_finite() || i1 == i2) CHECK(rel == expect);
        }
      }
    }
  }
}

TEST_CASE("ties with an uncertain ray are incomparable") {
  const SliceRay a = ray(ExtReal(1.0), true);
  const SliceRay b = ray(ExtReal(1.0 + 1e-9), false, Certainty::kUncertain);
  CHECK(compare(a, b, 1e-6).relation == Relation::kIncomparable);
  CHECK(compare(a, ray(ExtReal(3.0), false, Certainty::kUncertain), 1e-6).relation == Relation::kStrictSuperset);
}

TEST_CASE("certainty follows the value report") {
  ValueReport r;
  CHECK(certainty_of(r) == Certainty::kExact);
  r.method = Method::kGrid;
  CHECK(certainty_of(r) == Certainty::kGridCertified);
  r.attainment = Attainment::kUncertain;
  CHECK(certainty_of(r) == Certainty::kUncertain);
}

TEST_CASE("slices of the non-solvable example") {
  const CheckConfig cc;
  const SliceSet s = compute_slices(example_nonsolvable(), 0.0, cc);
  CHECK(s.epi.endpoint_included);
  CHECK_FALSE(s.omega.endpoint_included);
  CHECK(std::abs(s.omega.threshold.value()) < 1e-6);
  const auto weak = check_weak_duality(s, cc.tol);
  for (const auto& v : weak) {
    CHECK(v.verdict == Verdict::kHolds);
    CHECK(v.consistent);
  }
  for (const auto& v : check_zero_gap(s, cc.tol)) CHECK(v.verdict == Verdict::kHolds);
  for (const auto& v : check_strong_duality(s, cc.tol)) {
    CHECK(v.verdict == Verdict::kFails);
    CHECK(v.consistent);
  }
}

TEST_CASE("Omega slice lies inside the K slice") {
  const CheckConfig cc;
  for (const DCInstance& inst : random_instances(707, 20, GenConfig{0.3})) {
    for (double p : {-1.0, 0.0, 2.0}) {
      const SliceSet s = compute_slices(inst, p, cc);
      CHECK_MESSAGE(ray_subset(s.omega, s.k, cc.tol), inst.name, " p*=", p);
    }
  }
}

TEST_CASE("verdicts are internally consistent on random instances") {
  const CheckConfig cc;
  for (const DCInstance& inst : random_instances(808, 15, GenConfig{0.5})) {
    const SliceSet s = compute_slices(inst, 0.0, cc);
    for (const auto* group : {&s}) {
      for (const auto& v : check_weak_duality(*group, cc.tol)) CHECK_MESSAGE(v.consistent, inst.name, v.property);
      for (const auto& v : check_zero_gap(*group, cc.tol)) CHECK_MESSAGE(v.consistent, inst.name, v.property);
      for (const auto& v : check_strong_duality(*group, cc.tol)) CHECK_MESSAGE(v.consistent, inst.name, v.property);
    }
  }
}

TEST_CASE("Lambda slice: both routes agree") {
  const CheckConfig cc;
  for (const DCInstance& inst : random_instances(909, 10, GenConfig{0.5})) {
    const LambdaSlice l = lambda_slice(inst, 0.0, cc);
    CHECK_FALSE(l.disagreement);
    CHECK(near(l.ray.threshold, l.direct.threshold, 1e-6));
    CHECK(l.hull_error <= 1e-6);
  }
}

TEST_CASE("strong duality of the g = 0 pair") {
  const CheckConfig cc;
  // Unattained dual sup: the union slice misses its endpoint.
  PropertyVerdict v = check_p0_d0_strong(example_nonsolvable().f, Interval::at_least(0.0), 0.0, cc);
  CHECK(v.verdict == Verdict::kFails);
  CHECK(v.consistent);
  v = check_p0_d0_strong(PiecewiseFunction::indicator(Interval::at_least(0.0)), Interval::at_least(0.0), 0.0, cc);
  CHECK(v.verdict == Verdict::kHolds);
  const auto ps = pstar_grid(-2, 2, 5);
  const StableVerdict st =
      check_p0_d0_stable(PiecewiseFunction::affine(1.0, 0.0, Interval::closed(0, 1)), Interval::real_line(), ps, cc);
  CHECK(st.rows.size() == 5);
  CHECK(st.violators.empty());
  CHECK_FALSE(st.uncertain);
}

TEST_CASE("the mixed theorem on the examples") {
  const CheckConfig cc;
  CHECK(check_theorem_mixed(example_weak_fails(), 0.0, cc).outcome == TheoremOutcome::kHypothesisFails);
  CHECK(check_theorem_mixed(example_hypothesis(), 0.0, cc).outcome == TheoremOutcome::kEquivalent);
  const TheoremVerdict t = check_theorem_mixed(example_nonsolvable(), 0.0, cc);
  CHECK(t.outcome == TheoremOutcome::kEquivalent);
  CHECK(t.clause_i == Verdict::kFails);
  const auto ps = pstar_grid(-1, 1, 3);
  const StableTheoremVerdict st = check_theorem_mixed_stable(example_hypothesis(), ps, cc);
  CHECK(st.rows.size() == 3);
  CHECK(st.violators.empty());
}

TEST_CASE("p* grid") {
  const auto g = pstar_grid();
  CHECK(g.size() == 21);
  CHECK(g.front() == -5.0);
  CHECK(g.back() == 5.0);
  CHECK(g[10] == 0.0);
}
