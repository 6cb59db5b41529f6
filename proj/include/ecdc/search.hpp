#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ecdc/extreal.hpp"
#include "ecdc/interval.hpp"
#include "ecdc/parallel.hpp"

namespace ecdc {

struct SearchConfig {
  double box_lo = -64.0;
  double box_hi = 64.0;
  int points = 4097;
  double tol = 1e-9;
  Exec exec = Exec::kParallel;

  void validate() const;
};

enum class Attainment { kAttained, kNotAttained, kUncertain };
const char* to_string(Attainment a);

struct SearchResult {
  ExtReal value = ExtReal::neg_inf();
  Attainment attainment = Attainment::kAttained;
  std::optional<double> arg;
  bool tail = false;      // value is a limit along an unbounded direction
  std::size_t evaluations = 0;
};

using ScalarFn = std::function<ExtReal(double)>;

/// How densely the search domain is sampled.
enum class Sampling {
  kGrid,            // uniform box grid + geometric refinement + critical points
  kCriticalOnly,    // critical points and domain-end probes only (exact for
                    // piecewise-affine integrands whose kinks are all listed)
};

/// Sample points for a search over `dom`: the box grid clipped to `dom`,
/// geometric refinement near 0, the box edges and finite domain ends, plus the
/// supplied critical points that lie in `dom`. Sorted, unique.
std::vector<double> search_points(const Interval& dom, std::span<const double> critical, const SearchConfig& cfg,
                                  Sampling sampling);

/// Supremum of fn over dom. Open domain ends, unbounded directions and
/// transitions to -inf are probed so an approached-but-unattained supremum is
/// reported as such. Throws Error(kSearchBoundsTooSmall) when the value keeps
/// drifting along an unbounded direction without converging or diverging.
SearchResult maximize(const ScalarFn& fn, const Interval& dom, std::span<const double> critical,
                      const SearchConfig& cfg, Sampling sampling = Sampling::kGrid);

/// Infimum, via maximize of -fn.
SearchResult minimize(const ScalarFn& fn, const Interval& dom, std::span<const double> critical,
                      const SearchConfig& cfg, Sampling sampling = Sampling::kGrid);

}  // namespace ecdc
