#include "ecdc/instances.hpp"

#include <algorithm>
#include <cmath>

namespace ecdc {

DCInstance example_weak_fails() {
  PiecewiseFunction f({Piece{Interval::at_least(0.0), Affine{1.0, 0.0}}});
  PiecewiseFunction g({Piece{Interval::point(0.0), PointValue{1.0}}, Piece{Interval::greater_than(0.0), Affine{1.0, 0.0}}});
  return {f, g, Interval::at_least(0.0), "ex3_1_weak_fails"};
}

DCInstance example_nonsolvable() {
  PiecewiseFunction f({Piece{Interval::at_most(0.0), NegSqrt{2.0}}});
  PiecewiseFunction g({Piece{Interval::at_most(0.0), Affine{-1.0, 0.0}}});
  return {f, g, Interval::at_least(0.0), "ex5_1_nonsolvable"};
}

DCInstance example_hypothesis() {
  PiecewiseFunction f({Piece{Interval::at_least(0.0), Affine{1.0, 1.0}}});
  PiecewiseFunction g({Piece{Interval::point(0.0), PointValue{1.0}}, Piece{Interval::greater_than(0.0), Affine{1.0, 0.0}}});
  return {f, g, Interval::greater_than(0.0), "ex5_2_hypothesis"};
}

SquareExample example_square() {
  SquareExample ex;
  std::vector<double> xs;
  for (int i = 0; i < 20; ++i) xs.push_back(0.25 * i);
  for (int k = 3; k <= 20; ++k) xs.push_back(5.0 - std::ldexp(1.0, -k));
  for (double x : xs) {
    for (int j = 0; j <= 20; ++j) ex.C.points.push_back({x, 0.25 * j});
  }
  ex.C.label = "C";
  ex.D.points = ex.C.points;
  ex.D.points.push_back(ex.P);
  ex.D.label = "C+P";

  for (double y : {0.0, 0.5, 1.25, 2.5, 3.75, 4.5, 5.0}) ex.exterior_C.push_back({5.0, y});
  for (Point2 p : {Point2{5.5, 2.5}, Point2{6.0, 6.0}, Point2{7.0, 0.0}, Point2{-1.0, 2.5}, Point2{-0.5, -0.5},
                   Point2{2.5, -1.0}, Point2{2.5, 5.5}, Point2{0.0, 6.0}, Point2{10.0, 10.0}, Point2{5.0, -3.0},
                   Point2{-4.0, 9.0}, Point2{5.25, 5.0}, Point2{5.0, 5.5}, Point2{5.001, 2.0}}) {
    ex.exterior_C.push_back(p);
  }
  for (double y : {0.25, 1.0, 2.5, 4.0, 4.75}) ex.dashed_edge.push_back({5.0, y});
  return ex;
}

namespace {

class Draw {
 public:
  explicit Draw(std::mt19937_64& rng) : rng_(rng) {}
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool chance(double p) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng_) < p; }
  double quarter(int lo, int hi) { return 0.25 * integer(lo, hi); }

 private:
  std::mt19937_64& rng_;
};

PiecewiseFunction random_pa(Draw& draw, const Interval& dom, int max_breaks, int span) {
  if (dom.is_point()) return PiecewiseFunction({Piece{dom, PointValue{0.5 * draw.integer(-4, 4)}}});
  const int lo_q = dom.lo.is_unbounded() ? -span : static_cast<int>(std::lround(dom.lo.at * 4)) + 1;
  const int hi_q = dom.hi.is_unbounded() ? span : static_cast<int>(std::lround(dom.hi.at * 4)) - 1;
  std::vector<double> bps;
  if (lo_q <= hi_q) {
    int k = draw.integer(0, max_breaks);
    for (int i = 0; i < k; ++i) bps.push_back(0.25 * draw.integer(lo_q, hi_q));
    std::sort(bps.begin(), bps.end());
    bps.erase(std::unique(bps.begin(), bps.end()), bps.end());
  }
  std::vector<double> slopes;
  for (std::size_t i = 0; i <= bps.size(); ++i) slopes.push_back(0.5 * draw.integer(-6, 6));
  std::sort(slopes.begin(), slopes.end());

  std::vector<Piece> pieces;
  double b = 0.5 * draw.integer(-4, 4);
  for (std::size_t i = 0; i <= bps.size(); ++i) {
    if (i > 0) b += (slopes[i - 1] - slopes[i]) * bps[i - 1];
    Bound lo = i == 0 ? dom.lo : Bound::closed(bps[i - 1]);
    Bound hi = i == bps.size() ? dom.hi : Bound::open(bps[i]);
    pieces.push_back(Piece{Interval{lo, hi}, Affine{slopes[i], b}});
  }
  return PiecewiseFunction(std::move(pieces));
}

Bound random_end(Draw& draw, double at) { return draw.chance(0.6) ? Bound::closed(at) : Bound::open(at); }

// A bound of f inside the matching bound of g, on the lattice.
Bound inner_end(Draw& draw, const Bound& outer, bool lower, int span) {
  if (draw.chance(0.5)) {
    if (outer.is_closed() && draw.chance(0.3)) return Bound::open(outer.at);
    return outer;
  }
  int edge = outer.is_unbounded() ? (lower ? -span : span) : static_cast<int>(std::lround(outer.at * 4));
  if (lower ? edge + 1 > -1 : edge - 1 < 1) return outer;
  int q = lower ? draw.integer(edge + 1, -1) : draw.integer(1, edge - 1);
  return random_end(draw, 0.25 * q);
}

}  // namespace

DCInstance random_instance(std::mt19937_64& rng, const GenConfig& cfg, const std::string& name) {
  Draw draw(rng);
  const int span = cfg.lattice_span;
  const bool jump = draw.chance(cfg.jump_prob);

  Interval dg;
  dg.lo = draw.chance(0.3) ? Bound::unbounded() : random_end(draw, draw.quarter(-span, -1));
  dg.hi = draw.chance(0.3) ? Bound::unbounded() : random_end(draw, draw.quarter(1, span));
  if (jump && !dg.lo.is_closed() && !dg.hi.is_closed()) {
    dg.lo = Bound::closed(dg.lo.is_unbounded() ? draw.quarter(-span, -1) : dg.lo.at);
  }

  Interval df{inner_end(draw, dg.lo, true, span), inner_end(draw, dg.hi, false, span)};

  PiecewiseFunction f = random_pa(draw, df, cfg.max_breaks, span);
  PiecewiseFunction g = random_pa(draw, dg, cfg.max_breaks, span);
  if (jump) {
    std::vector<Piece> ps = g.pieces();
    const bool at_lo = dg.lo.is_closed() && (!dg.hi.is_closed() || draw.chance(0.5));
    const double lift = 0.5 * draw.integer(1, 4);
    if (at_lo) {
      double x = dg.lo.at;
      ps.front().dom.lo = Bound::open(x);
      ps.insert(ps.begin(), Piece{Interval::point(x), PointValue{ps.front().curve()(x) + lift}});
    } else {
      double x = dg.hi.at;
      ps.back().dom.hi = Bound::open(x);
      ps.push_back(Piece{Interval::point(x), PointValue{ps.back().curve()(x) + lift}});
    }
    g = PiecewiseFunction(std::move(ps));
  }

  // A contains a lattice point z of dom f.
  const int zlo = df.lo.is_unbounded() ? -span : static_cast<int>(std::lround(df.lo.at * 4)) + (df.lo.is_open() ? 1 : 0);
  const int zhi = df.hi.is_unbounded() ? span : static_cast<int>(std::lround(df.hi.at * 4)) - (df.hi.is_open() ? 1 : 0);
  const double z = 0.25 * draw.integer(zlo, std::max(zlo, zhi));
  Interval A;
  if (!draw.chance(0.25)) {
    int k = draw.integer(0, 8);
    A.lo = k == 0 ? Bound::closed(z) : random_end(draw, z - 0.25 * k);
  }
  if (!draw.chance(0.25)) {
    int k = draw.integer(0, 8);
    A.hi = k == 0 ? Bound::closed(z) : random_end(draw, z + 0.25 * k);
  }

  DCInstance inst{std::move(f), std::move(g), A, name};
  inst.validate();
  return inst;
}

std::vector<DCInstance> random_instances(std::uint64_t seed, int count, const GenConfig& cfg) {
  std::mt19937_64 rng(seed);
  std::vector<DCInstance> out;
  for (int i = 0; i < count; ++i) out.push_back(random_instance(rng, cfg, "random_" + std::to_string(seed) + "_" + std::to_string(i)));
  return out;
}

}  // namespace ecdc
