#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ecdc/dc_duality.hpp"

namespace ecdc {

enum class Certainty { kExact, kGridCertified, kUncertain };
const char* to_string(Certainty c);

/// The intersection of a characterisation set with the slice
/// {(-p*, 0)} x R_{++} x R: every delta > 0 together with
/// {beta > threshold}, plus beta = threshold when endpoint_included.
/// threshold = -inf is the whole slice, +inf the empty one.
struct SliceRay {
  double pstar = 0.0;  // anchor is (-pstar, 0)
  ExtReal threshold;
  bool endpoint_included = true;
  Certainty certainty = Certainty::kExact;

  bool empty() const { return threshold.is_pos_inf(); }
};

enum class Membership { kIn, kOut, kUncertain };
const char* to_string(Membership m);

/// Is (-p*, 0, delta, beta) in the set? Non-exact rays answer UNCERTAIN
/// within tol of their threshold.
Membership membership(const SliceRay& ray, double delta, double beta, double tol);

enum class Relation { kEqual, kStrictSubset, kStrictSuperset, kIncomparable };
const char* to_string(Relation r);

struct SliceComparison {
  SliceRay left;
  SliceRay right;
  Relation relation = Relation::kIncomparable;
  std::string interpretation;
};

/// Pure ray algebra with exact thresholds: t1 > t2, or t1 = t2 and the
/// endpoint of r2 is included whenever that of r1 is.
bool ray_subset(const SliceRay& r1, const SliceRay& r2, double tol);
/// Thresholds within tol count as equal. A tie involving an UNCERTAIN ray is
/// INCOMPARABLE.
SliceComparison compare(const SliceRay& left, const SliceRay& right, double tol);

Certainty certainty_of(const ValueReport& r);

SliceRay epi_slice_from(const ValueReport& vP, double pstar);
SliceRay omega_slice_from(const ValueReport& vDF, double pstar);
/// Included at the threshold iff every outer point either exceeds the value
/// or ties it with an attained inner supremum.
SliceRay k_slice_from(const DbarFReport& vDbarF, double pstar, double tol);

struct CheckConfig {
  SearchConfig search;
  double tol = 1e-6;
};

SliceRay epi_slice(const DCInstance& inst, double pstar);
SliceRay omega_slice(const DCInstance& inst, double pstar, const CheckConfig& cfg);
SliceRay k_slice(const DCInstance& inst, double pstar, const CheckConfig& cfg);

struct LambdaSlice {
  SliceRay ray;          // from the instance with g replaced by its e-convex hull
  SliceRay direct;       // from the conjugate formula over dom g*
  bool disagreement = false;
  double hull_error = 0.0;  // max |sampled f^{cc'} - symbolic hull| at the checked points
};
LambdaSlice lambda_slice(const DCInstance& inst, double pstar, const CheckConfig& cfg);

/// All slices and values of one instance at one p*.
struct SliceSet {
  double pstar = 0.0;
  ValueReport vP;
  ValueReport vDF;
  DbarFReport vDbarF;
  SliceRay epi;
  SliceRay omega;
  SliceRay k;
};
SliceSet compute_slices(const DCInstance& inst, double pstar, const CheckConfig& cfg);

enum class Verdict { kHolds, kFails, kUncertain };
const char* to_string(Verdict v);

struct PropertyVerdict {
  std::string property;
  double pstar = 0.0;
  SliceComparison comparison;
  Verdict verdict = Verdict::kUncertain;   // from the slices
  Verdict value_verdict = Verdict::kUncertain;  // from the optimal values
  bool consistent = true;
};

/// Omega-slice (resp. K-slice) inside the epi slice, against vP >= vDF (resp. vDbarF).
std::vector<PropertyVerdict> check_weak_duality(const SliceSet& s, double tol);
/// Equal thresholds (the e'-convex hull of a ray closes its endpoint).
std::vector<PropertyVerdict> check_zero_gap(const SliceSet& s, double tol);
/// Equal rays including endpoints, against zero gap plus dual attainment.
std::vector<PropertyVerdict> check_strong_duality(const SliceSet& s, double tol);

/// Strong duality for inf (f + delta_A) and its dual: the union slice of the
/// dual side against the epi slice, and the direct value check.
PropertyVerdict check_p0_d0_strong(const PiecewiseFunction& f, const Interval& A, double pstar,
                                   const CheckConfig& cfg);

struct StableVerdict {
  std::string property;
  std::vector<PropertyVerdict> rows;
  std::vector<double> violators;
  bool uncertain = false;
};
StableVerdict check_p0_d0_stable(const PiecewiseFunction& f, const Interval& A, std::span<const double> pstars,
                                 const CheckConfig& cfg);

enum class TheoremOutcome { kHypothesisFails, kEquivalent, kViolated, kUncertain };
const char* to_string(TheoremOutcome o);

struct TheoremVerdict {
  double pstar = 0.0;
  SliceComparison hypothesis;  // epi slice against the Lambda slice
  bool lambda_disagreement = false;
  Verdict clause_i = Verdict::kUncertain;   // strong duality for the sup-inf dual
  Verdict clause_ii = Verdict::kUncertain;  // strong duality for the inf-sup dual and Omega = K
  TheoremOutcome outcome = TheoremOutcome::kUncertain;
};
TheoremVerdict check_theorem_mixed(const DCInstance& inst, double pstar, const CheckConfig& cfg);

struct StableTheoremVerdict {
  std::vector<TheoremVerdict> rows;
  std::vector<double> violators;      // p* where the equivalence breaks
  std::vector<double> hypothesis_fails;
};
StableTheoremVerdict check_theorem_mixed_stable(const DCInstance& inst, std::span<const double> pstars,
                                                const CheckConfig& cfg);

/// n points spread uniformly over [lo, hi].
std::vector<double> pstar_grid(double lo = -5.0, double hi = 5.0, int n = 21);

}  // namespace ecdc
