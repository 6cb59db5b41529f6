#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ecdc/cconj.hpp"
#include "ecdc/dc_duality.hpp"

namespace ecdc {

/// A = [0, inf), f = x on A, g = 1 at 0 and x on (0, inf). g is not
/// e-convex and weak duality fails.
DCInstance example_weak_fails();

/// A = [0, inf), f = -2 sqrt(-x) and g = -x on (-inf, 0]. Zero gap without
/// dual solvability.
DCInstance example_nonsolvable();

/// A = (0, inf), f = x + 1 on [0, inf), g as in example_weak_fails.
DCInstance example_hypothesis();

/// The half-open square C = [0,5) x [0,5] and D = C with the corner P = (5,5)
/// added, sampled up to 2^-20 from the open edge.
struct SquareExample {
  PlanarSampledSet C;
  PlanarSampledSet D;
  Point2 P{5.0, 5.0};
  std::vector<Point2> exterior_C;   // includes the open edge, P and points beyond
  std::vector<Point2> dashed_edge;  // (5, y), 0 < y < 5
};
SquareExample example_square();

struct GenConfig {
  double jump_prob = 0.0;
  int max_breaks = 3;
  int lattice_span = 12;  // breakpoints in [-span/4, span/4]
};

/// Seeded piecewise-affine instance: breakpoints on a 1/4 lattice, integer or
/// half-integer slopes, dom f inside dom g, A an interval meeting dom f.
/// With probability jump_prob, g gets an upward jump at a closed domain end.
DCInstance random_instance(std::mt19937_64& rng, const GenConfig& cfg, const std::string& name);

std::vector<DCInstance> random_instances(std::uint64_t seed, int count, const GenConfig& cfg = {});

}  // namespace ecdc
