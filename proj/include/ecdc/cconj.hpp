#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ecdc/curve.hpp"
#include "ecdc/extreal.hpp"
#include "ecdc/parallel.hpp"
#include "ecdc/pwfunc.hpp"

namespace ecdc {

/// A point (x*, y*, alpha) of W = X* x X* x R.
struct WPoint {
  double xstar = 0.0;
  double ystar = 0.0;
  double alpha = 0.0;
};

/// c(x, (x*, y*, alpha)) = x*x* if x*y* < alpha, +inf otherwise.
ExtReal coupling_c(double x, const WPoint& w);

/// f^c(w) = f*(x*) when dom f lies in the open half-space {y* x < alpha},
/// +inf otherwise. Attainment is forwarded from the Fenchel conjugate.
Extremum c_conjugate(const PiecewiseFunction& f, const WPoint& w);

/// A function on W known on a finite grid; points absent from the grid are
/// treated as outside its domain.
using SampledW = std::vector<std::pair<WPoint, ExtReal>>;

/// sup over the grid of c(x, w) - h(w). A lower bound on the true
/// c'-conjugate. Throws Error(kEmptyGrid) on an empty grid.
ExtReal c_prime_conjugate(const SampledW& h, double x, Exec exec = Exec::kSerial);

struct WGridConfig {
  double box_lo = -64.0;
  double box_hi = 64.0;
  int points = 4097;
};

/// The W-grid used for f^{cc'}: x* from the box grid, geometric refinement,
/// the slopes of f and the finite ends of fdom f*; (y*, alpha) from the
/// tightest half-spaces containing dom f plus (0, 1).
std::vector<WPoint> w_grid_for(const PiecewiseFunction& f, const WGridConfig& cfg);

struct SampledFunction {
  std::vector<double> x;
  std::vector<ExtReal> value;
};

/// f^{cc'} on `xgrid`. Pointwise <= f. Throws Error(kNoMinorant) when dom f*
/// is empty.
SampledFunction eco_hull(const PiecewiseFunction& f, std::span<const double> xgrid, const WGridConfig& cfg = {},
                         Exec exec = Exec::kParallel);

/// Largest e-convex minorant of a univariate convex function built
/// symbolically: upward jumps at closed domain ends are lowered onto the
/// one-sided limit, open ends stay open.
PiecewiseFunction eco_hull_symbolic(const PiecewiseFunction& f);

/// True iff f has no upward jump at a closed end of its domain.
bool is_e_convex_function(const PiecewiseFunction& f, double tol = 1e-9);

// ---------------------------------------------------------------------------
// Planar e-convexity certification.

using Point2 = std::array<double, 2>;

struct PlanarSampledSet {
  std::vector<Point2> points;
  std::string label;

  /// Throws Error(kValidation) on an empty or duplicated sample.
  void validate() const;
};

enum class SeparationVerdict { kSeparated, kNotSeparated, kUncertain };
const char* to_string(SeparationVerdict v);

struct SeparationReport {
  Point2 exterior{};
  SeparationVerdict verdict = SeparationVerdict::kUncertain;
  std::optional<Point2> witness;          // x* with <x - x0, x*> < 0 on every sample
  double margin = 0.0;                    // best -max_x <u, x - x0> over directions
  std::optional<Point2> blocking_point;   // sample pinning the least-violated direction
};

struct SeparationConfig {
  int directions = 2048;
  double tol = 1e-9;
  Exec exec = Exec::kParallel;
};

/// Per-direction maximum of <u(theta), x - x0> over the samples together with
/// the attaining sample index. Kernel shared by the serial and parallel paths.
std::vector<std::pair<double, std::size_t>> direction_maxima(std::span<const Point2> points, const Point2& x0,
                                                             int directions, Exec exec);

/// Searches, for every exterior point x0, a unit x* with <x - x0, x*> < 0 on
/// all samples. SEPARATED when some direction clears every sample by more
/// than tol. NOT_SEPARATED when every direction is crossed by a sample
/// (value > tol) or merely touched (|value| <= tol) with both neighbouring
/// directions crossed. UNCERTAIN otherwise.
std::vector<SeparationReport> is_e_convex(const PlanarSampledSet& set, std::span<const Point2> exterior,
                                          const SeparationConfig& cfg = {});

}  // namespace ecdc
