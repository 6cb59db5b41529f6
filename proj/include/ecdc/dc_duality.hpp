#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ecdc/cconj.hpp"
#include "ecdc/extreal.hpp"
#include "ecdc/interval.hpp"
#include "ecdc/pwfunc.hpp"
#include "ecdc/search.hpp"

namespace ecdc {

/// inf f(x) - g(x) s.t. x in A, with f, g proper convex and dom f inside dom g.
struct DCInstance {
  PiecewiseFunction f;
  PiecewiseFunction g;
  Interval A;
  std::string name;

  /// Throws Error(kValidation) when A is empty or dom f is not inside dom g.
  void validate() const;
};

enum class Method { kExact, kGrid };
const char* to_string(Method m);

struct ValueReport {
  ExtReal value;
  Attainment attainment = Attainment::kAttained;
  std::optional<double> witness;   // x for the primal, the outer conjugate variable for the duals
  std::optional<WPoint> witness_w; // full (x*, y*, alpha) or (u*, v*, gamma) for the duals
  Method method = Method::kExact;
  bool tail = false;               // outer optimum is a limit along an unbounded direction

  bool attained() const { return attainment == Attainment::kAttained; }
};

/// Per outer point of the inf-sup dual: objective value and whether its inner
/// supremum is reached.
struct OuterSample {
  double u = 0.0;
  ExtReal value;
  bool inner_attained = false;
};

struct DbarFReport {
  ValueReport value;
  std::vector<OuterSample> outer;  // the evaluated outer points, ascending in u

  /// Every outer point either exceeds the optimal value by more than tol or
  /// reaches it with an attained inner supremum. This is the solvability
  /// notion under which strong duality for the inf-sup dual is read.
  bool inner_solvable(double tol) const;
};

/// inf over dom f and A of f - g + <., p*>. Exact: elementary intervals between
/// breakpoints are minimised in closed form and the breakpoints themselves
/// evaluated with the DC convention.
ValueReport primal_value(const DCInstance& inst, double pstar = 0.0);

/// The sup-inf dual with the half-space gates collapsed to (y*, alpha) =
/// (v*, gamma) = (0, 1): sup over x* of inf over u* of
/// g*(u*) - f*(u* - x* - p*) - sigma_A(x*).
ValueReport dual_DF_value(const DCInstance& inst, const SearchConfig& cfg, double pstar = 0.0);

/// Inner infimum of the sup-inf dual at one outer triple, with the gates of
/// delta_A^c and f^c evaluated explicitly. Any such value is a lower bound on
/// the dual optimal value.
ExtReal dual_DF_objective(const DCInstance& inst, const WPoint& outer, const SearchConfig& cfg, double pstar = 0.0);

/// The inf-sup dual with the same collapse, keeping the per-outer attainment
/// of the inner supremum.
DbarFReport dual_DbarF_value(const DCInstance& inst, const SearchConfig& cfg, double pstar = 0.0);

struct PerturbedValues {
  double pstar = 0.0;
  ValueReport vP;
  ValueReport vDF;
  DbarFReport vDbarF;
};
PerturbedValues perturbed_values(const DCInstance& inst, double pstar, const SearchConfig& cfg);

/// The g = 0 pair: inf (f + delta_A) and its dual.
struct P0D0Values {
  ValueReport vP0;
  ValueReport vD0;
};
P0D0Values p0_d0_values(const PiecewiseFunction& f, const Interval& A, const SearchConfig& cfg, double pstar = 0.0);
DCInstance p0_instance(const PiecewiseFunction& f, const Interval& A);

enum class Classification { kWeakFails, kWeakOnly, kZeroGap, kStrong };
const char* to_string(Classification c);
Classification classify(const ValueReport& primal, const ExtReal& dual, bool dual_solvable, double tol);

struct DualityReport {
  ValueReport vP;
  ValueReport vDF;
  ValueReport vDbarF;
  Classification df = Classification::kWeakOnly;
  Classification dbarf = Classification::kWeakOnly;
  bool g_e_convex = true;
};
DualityReport duality_report(const DCInstance& inst, const SearchConfig& cfg, double pstar = 0.0, double tol = 1e-6);

/// Grids for the uncollapsed evaluation of the sup-inf dual.
struct FullGrid {
  std::vector<double> xstar;   // shared by x* and u*
  std::vector<double> ystar;   // shared by y* and v*
  std::vector<double> alpha;   // shared by alpha and gamma
};

/// Brute force over all six conjugate variables, each c-conjugate gated
/// explicitly.
ExtReal dual_DF_full_grid(const DCInstance& inst, const FullGrid& grid, double pstar = 0.0, Exec exec = Exec::kParallel);
/// The collapsed two-variable objective on the same x*/u* grid.
ExtReal dual_DF_collapsed_grid(const DCInstance& inst, std::span<const double> xstar, double pstar = 0.0);

/// sup over u* in dom g* of (f + delta_A)*(u* - p*) - g*(u*), the negated
/// value of the problem with g replaced by its e-convex hull.
ValueReport eco_gap_value(const DCInstance& inst, const SearchConfig& cfg, double pstar = 0.0);

}  // namespace ecdc
