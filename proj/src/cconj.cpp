#include "ecdc/cconj.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "ecdc/error.hpp"

namespace ecdc {

ExtReal coupling_c(double x, const WPoint& w) {
  if (x * w.ystar < w.alpha) return ExtReal(x * w.xstar);
  return ExtReal::pos_inf();
}

Extremum c_conjugate(const PiecewiseFunction& f, const WPoint& w) {
  if (!halfspace_gate(f.domain(), w.ystar, w.alpha)) return {ExtReal::pos_inf(), false, std::nullopt};
  return fenchel_conjugate(f, w.xstar);
}

ExtReal c_prime_conjugate(const SampledW& h, double x, Exec exec) {
  if (h.empty()) throw Error(ErrorCode::kEmptyGrid, "c'-conjugate needs a nonempty W-grid");
  std::vector<ExtReal> terms = map_index<ExtReal>(
      h.size(), [&](std::size_t i) { return sub_conj(coupling_c(x, h[i].first), h[i].second); }, exec);
  ExtReal best = ExtReal::neg_inf();
  for (const ExtReal& t : terms) best = max(best, t);
  return best;
}

std::vector<WPoint> w_grid_for(const PiecewiseFunction& f, const WGridConfig& cfg) {
  const ConjDomain cd = conj_domain(f);
  std::set<double> xs;
  auto add = [&](double v) {
    if (std::isfinite(v) && cd.fdom.contains(v)) xs.insert(v);
  };
  const double h = (cfg.box_hi - cfg.box_lo) / (cfg.points - 1);
  for (int i = 0; i < cfg.points; ++i) add(cfg.box_lo + h * i);
  add(0.0);
  for (int k = 1; k <= 40; ++k) {
    add(std::ldexp(1.0, -k));
    add(-std::ldexp(1.0, -k));
  }
  for (double s : f.slopes()) add(s);
  for (const Bound* b : {&cd.fdom.lo, &cd.fdom.hi}) {
    if (b->is_unbounded()) continue;
    add(b->at);
    double inward = (b == &cd.fdom.lo) ? 1.0 : -1.0;
    for (int k = 1; k <= 40; ++k) add(b->at + inward * std::max(1.0, std::abs(b->at)) * std::ldexp(1.0, -k));
  }

  std::vector<std::pair<double, double>> gates{{0.0, 1.0}};
  const Interval& dom = f.domain();
  auto add_gate = [&](double ystar, const Bound& end) {
    if (end.is_unbounded()) return;
    double s = ystar * end.at;
    double eps = 1e-12 * (1.0 + std::abs(s));
    if (end.is_open()) gates.emplace_back(ystar, s);
    gates.emplace_back(ystar, s + eps);
  };
  add_gate(1.0, dom.hi);
  add_gate(-1.0, dom.lo);

  std::vector<WPoint> grid;
  grid.reserve(xs.size() * gates.size());
  for (double x : xs) {
    for (auto [y, a] : gates) grid.push_back({x, y, a});
  }
  return grid;
}

SampledFunction eco_hull(const PiecewiseFunction& f, std::span<const double> xgrid, const WGridConfig& cfg,
                         Exec exec) {
  if (conj_domain(f).fdom.empty()) throw Error(ErrorCode::kNoMinorant, "conjugate has empty domain");
  std::vector<WPoint> ws = w_grid_for(f, cfg);
  if (ws.empty()) throw Error(ErrorCode::kNoMinorant, "W-grid misses the conjugate domain");
  std::vector<ExtReal> fc = map_index<ExtReal>(ws.size(), [&](std::size_t i) { return c_conjugate(f, ws[i]).value; },
                                               exec);
  SampledW h;
  h.reserve(ws.size());
  for (std::size_t i = 0; i < ws.size(); ++i) h.emplace_back(ws[i], fc[i]);

  SampledFunction out;
  out.x.assign(xgrid.begin(), xgrid.end());
  out.value = map_index<ExtReal>(out.x.size(), [&](std::size_t i) { return c_prime_conjugate(h, out.x[i]); }, exec);
  return out;
}

namespace {

// Index of the point piece sitting on a closed domain end next to an open
// formula piece, paired with that neighbour.
std::vector<std::pair<std::size_t, std::size_t>> end_jumps(const PiecewiseFunction& f) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const auto& ps = f.pieces();
  if (ps.size() < 2) return out;
  if (ps.front().is_point()) out.emplace_back(0, 1);
  if (ps.back().is_point()) out.emplace_back(ps.size() - 1, ps.size() - 2);
  return out;
}

}  // namespace

bool is_e_convex_function(const PiecewiseFunction& f, double tol) {
  for (auto [pi, ni] : end_jumps(f)) {
    const Piece& pt = f.pieces()[pi];
    double lim = f.pieces()[ni].curve()(pt.dom.lo.at);
    double v = std::get<PointValue>(pt.formula).v;
    if (v > lim + tol * (1.0 + std::abs(lim))) return false;
  }
  return true;
}

PiecewiseFunction eco_hull_symbolic(const PiecewiseFunction& f) {
  std::vector<Piece> ps = f.pieces();
  for (auto [pi, ni] : end_jumps(f)) {
    double at = ps[pi].dom.lo.at;
    ps[pi].formula = PointValue{ps[ni].curve()(at)};
  }
  return PiecewiseFunction(std::move(ps));
}

void PlanarSampledSet::validate() const {
  if (points.empty()) throw Error(ErrorCode::kValidation, "planar set '" + label + "' has no samples");
  std::vector<Point2> sorted = points;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::kValidation, "planar set '" + label + "' has duplicate samples");
  }
}

const char* to_string(SeparationVerdict v) {
  switch (v) {
    case SeparationVerdict::kSeparated: return "SEPARATED";
    case SeparationVerdict::kNotSeparated: return "NOT_SEPARATED";
    case SeparationVerdict::kUncertain: return "UNCERTAIN";
  }
  return "?";
}

std::vector<std::pair<double, std::size_t>> direction_maxima(std::span<const Point2> points, const Point2& x0,
                                                             int directions, Exec exec) {
  return map_index<std::pair<double, std::size_t>>(
      static_cast<std::size_t>(directions),
      [&](std::size_t k) {
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / directions;
        // Exact axis directions keep boundary-touching samples at exactly 0.
        double ux = std::cos(theta);
        double uy = std::sin(theta);
        if (4 * k % static_cast<std::size_t>(directions) == 0) {
          std::size_t q = 4 * k / static_cast<std::size_t>(directions);
          const double ax[4] = {1, 0, -1, 0};
          const double ay[4] = {0, 1, 0, -1};
          ux = ax[q];
          uy = ay[q];
        }
        double best = -std::numeric_limits<double>::infinity();
        std::size_t arg = 0;
        for (std::size_t i = 0; i < points.size(); ++i) {
          double v = ux * (points[i][0] - x0[0]) + uy * (points[i][1] - x0[1]);
          if (v > best) best = v, arg = i;
        }
        return std::make_pair(best, arg);
      },
      exec);
}

std::vector<SeparationReport> is_e_convex(const PlanarSampledSet& set, std::span<const Point2> exterior,
                                          const SeparationConfig& cfg) {
  set.validate();
  if (cfg.directions < 8) throw Error(ErrorCode::kValidation, "need at least 8 separation directions");
  std::vector<SeparationReport> out;
  for (const Point2& x0 : exterior) {
    if (std::find(set.points.begin(), set.points.end(), x0) != set.points.end()) {
      throw Error(ErrorCode::kValidation, "exterior point coincides with a sample of '" + set.label + "'");
    }
    auto maxima = direction_maxima(set.points, x0, cfg.directions, cfg.exec);
    const std::size_t n = maxima.size();
    std::size_t kmin = 0;
    for (std::size_t k = 1; k < n; ++k) {
      if (maxima[k].first < maxima[kmin].first) kmin = k;
    }
    SeparationReport rep;
    rep.exterior = x0;
    rep.margin = -maxima[kmin].first;
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(kmin) / cfg.directions;
    if (maxima[kmin].first < -cfg.tol) {
      rep.verdict = SeparationVerdict::kSeparated;
      rep.witness = Point2{std::cos(theta), std::sin(theta)};
    } else {
      bool pinned = true;
      for (std::size_t k = 0; k < n && pinned; ++k) {
        if (maxima[k].first > cfg.tol) continue;
        pinned = maxima[(k + n - 1) % n].first > cfg.tol && maxima[(k + 1) % n].first > cfg.tol;
      }
      rep.verdict = pinned ? SeparationVerdict::kNotSeparated : SeparationVerdict::kUncertain;
      rep.blocking_point = set.points[maxima[kmin].second];
    }
    out.push_back(rep);
  }
  return out;
}

}  // namespace ecdc
