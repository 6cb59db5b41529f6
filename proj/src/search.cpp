#include "ecdc/search.hpp"

#include <algorithm>
#include <cmath>

#include "ecdc/error.hpp"

namespace ecdc {

namespace {

constexpr int kGeometricLevels = 40;
constexpr int kTailSteps = 48;
constexpr int kGoldenSteps = 90;

double scaled(double tol, const ExtReal& v) { return tol * (1.0 + (v.is_finite() ? std::abs(v.value()) : 0.0)); }

bool strictly_above(const ExtReal& a, const ExtReal& b) {
  if (!a.is_finite() || !b.is_finite()) return b < a;
  return a.value() > b.value() + 1e-12 * (1.0 + std::abs(a.value()));
}

struct Probe {
  const ScalarFn& fn;
  std::size_t evaluations = 0;
  ExtReal operator()(double x) {
    ++evaluations;
    return fn(x);
  }
};

// Walks outward from `start` (a point already evaluated to `start_value`)
// along x_k = start + dir * scale * (2^k - 1).
SearchResult tail_walk(Probe& probe, double start, const ExtReal& start_value, double dir, const Interval& dom,
                       const SearchConfig& cfg) {
  const double scale = std::max(1.0, std::abs(start));
  double prev_x = start;
  ExtReal prev = start_value;
  double prev_inc = -1.0;
  int growing = 0;
  int shrinking = 0;
  for (int k = 1; k <= kTailSteps; ++k) {
    double x = start + dir * scale * (std::ldexp(1.0, k) - 1.0);
    if (!dom.contains(x)) break;
    ExtReal v = probe(x);
    if (v.is_pos_inf()) return {ExtReal::pos_inf(), Attainment::kAttained, x, true, 0};
    if (!strictly_above(v, prev)) {
      // Increments were already dying out: a limit at infinity, lost in rounding.
      if (shrinking >= 3) return {max(prev, v), Attainment::kNotAttained, std::nullopt, true, 0};
      // Turned over: the maximiser sits between the last two probes.
      return {prev, Attainment::kAttained, prev_x, false, 0};
    }
    double inc = v.value() - prev.value();
    if (prev_inc > 0) {
      double ratio = inc / prev_inc;
      growing = ratio >= 1.2 ? growing + 1 : 0;
      shrinking = ratio <= 0.8 ? shrinking + 1 : 0;
    }
    prev_inc = inc;
    prev = v;
    prev_x = x;
    if (inc <= scaled(cfg.tol, v) && shrinking >= 3) {
      return {v, Attainment::kNotAttained, std::nullopt, true, 0};
    }
    if (growing >= 6) return {ExtReal::pos_inf(), Attainment::kNotAttained, std::nullopt, true, 0};
  }
  if (prev_inc >= 0 && prev_inc <= scaled(cfg.tol, prev) && shrinking >= 3) {
    return {prev, Attainment::kNotAttained, std::nullopt, true, 0};
  }
  throw Error(ErrorCode::kSearchBoundsTooSmall,
              "supremum still moving at x = " + std::to_string(prev_x) + " (value " + prev.to_string() + ")");
}

// Golden-section refinement of a bracketed local maximum.
std::pair<double, ExtReal> golden(Probe& probe, double a, double b, double x0, ExtReal v0) {
  const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double best_x = x0;
  ExtReal best_v = v0;
  double c = b - phi * (b - a);
  double d = a + phi * (b - a);
  ExtReal fc = probe(c);
  ExtReal fd = probe(d);
  for (int it = 0; it < kGoldenSteps && b - a > 1e-15 * (1.0 + std::abs(a)); ++it) {
    if (fd < fc) {
      b = d;
      d = c;
      fd = fc;
      c = b - phi * (b - a);
      fc = probe(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + phi * (b - a);
      fd = probe(d);
    }
    if (best_v < fc) best_v = fc, best_x = c;
    if (best_v < fd) best_v = fd, best_x = d;
  }
  return {best_x, best_v};
}

void push_if(std::vector<double>& pts, const Interval& dom, double x) {
  if (std::isfinite(x) && dom.contains(x)) pts.push_back(x);
}

}  // namespace

void SearchConfig::validate() const {
  if (!(box_lo < box_hi)) throw Error(ErrorCode::kValidation, "search box requires lo < hi");
  if (points < 3) throw Error(ErrorCode::kValidation, "search grid needs at least 3 points");
  if (!(tol > 0.0)) throw Error(ErrorCode::kValidation, "tolerance must be positive");
}

const char* to_string(Attainment a) {
  switch (a) {
    case Attainment::kAttained: return "attained";
    case Attainment::kNotAttained: return "not_attained";
    case Attainment::kUncertain: return "uncertain";
  }
  return "?";
}

std::vector<double> search_points(const Interval& dom, std::span<const double> critical, const SearchConfig& cfg,
                                  Sampling sampling) {
  std::vector<double> pts;
  if (dom.empty()) return pts;
  const double width = cfg.box_hi - cfg.box_lo;
  double lo = std::max(cfg.box_lo, dom.lo_value());
  double hi = std::min(cfg.box_hi, dom.hi_value());
  if (!dom.lo.is_unbounded() && dom.lo.at > cfg.box_hi) {
    lo = dom.lo.at;
    hi = std::min(dom.hi_value(), lo + width);
  } else if (!dom.hi.is_unbounded() && dom.hi.at < cfg.box_lo) {
    hi = dom.hi.at;
    lo = std::max(dom.lo_value(), hi - width);
  }

  if (sampling == Sampling::kGrid) {
    if (lo < hi) {
      const double h = (hi - lo) / (cfg.points - 1);
      for (int i = 0; i < cfg.points; ++i) push_if(pts, dom, lo + h * i);
      for (int k = 1; k <= 20; ++k) {
        push_if(pts, dom, lo + (hi - lo) * std::ldexp(1.0, -k - 6));
        push_if(pts, dom, hi - (hi - lo) * std::ldexp(1.0, -k - 6));
      }
    }
    push_if(pts, dom, 0.0);
    for (int k = 1; k <= kGeometricLevels; ++k) {
      push_if(pts, dom, std::ldexp(1.0, -k));
      push_if(pts, dom, -std::ldexp(1.0, -k));
    }
  } else {
    push_if(pts, dom, lo);
    push_if(pts, dom, hi);
  }

  for (double c : critical) push_if(pts, dom, c);
  for (const Bound* b : {&dom.lo, &dom.hi}) {
    if (b->is_unbounded()) continue;
    if (b->is_closed()) pts.push_back(b->at);
    const double s = std::max(1.0, std::abs(b->at));
    const double inward = (b == &dom.lo) ? 1.0 : -1.0;
    for (int k = 1; k <= kGeometricLevels; ++k) push_if(pts, dom, b->at + inward * s * std::ldexp(1.0, -k));
  }
  if (pts.empty()) pts.push_back(dom.representative());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

SearchResult maximize(const ScalarFn& fn, const Interval& dom, std::span<const double> critical,
                      const SearchConfig& cfg, Sampling sampling) {
  std::vector<double> pts = search_points(dom, critical, cfg, sampling);
  if (pts.empty()) throw Error(ErrorCode::kEmptyGrid, "search domain " + dom.to_string() + " is empty");
  const std::size_t n = pts.size();
  std::vector<ExtReal> vals = map_index<ExtReal>(n, [&](std::size_t i) { return fn(pts[i]); }, cfg.exec);

  std::size_t best = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (vals[best] < vals[i]) best = i;
  }
  Probe probe{fn};
  SearchResult out{vals[best], Attainment::kAttained, pts[best], false, 0};
  if (!vals[best].is_finite()) {
    out.evaluations = n;
    return out;
  }

  // Rising into an end: compare against the nearest sample a visible distance
  // away, since the geometric probes crowd the end closer than any tie tolerance.
  auto rises_into = [&](std::size_t end, long long step) {
    if (n == 1) return true;
    const double gap = std::ldexp(std::max(1.0, std::abs(pts[end])), -20);
    long long j = static_cast<long long>(end) + step;
    while (j + step >= 0 && j + step < static_cast<long long>(n) &&
           std::abs(pts[static_cast<std::size_t>(j)] - pts[end]) < gap) {
      j += step;
    }
    return strictly_above(vals[end], vals[static_cast<std::size_t>(j)]);
  };
  const bool rises_right = best == n - 1 && rises_into(n - 1, -1);
  const bool rises_left = best == 0 && rises_into(0, 1);

  if (rises_right && dom.hi.is_unbounded()) {
    out = tail_walk(probe, pts[best], vals[best], 1.0, dom, cfg);
  } else if (rises_left && dom.lo.is_unbounded()) {
    out = tail_walk(probe, pts[best], vals[best], -1.0, dom, cfg);
  } else if ((rises_right && dom.hi.is_open()) || (rises_left && dom.lo.is_open())) {
    // Increasing into an excluded endpoint: the supremum is a limit.
    out.attainment = Attainment::kNotAttained;
  } else {
    // Transition to -inf next to the maximiser: locate it and look for a
    // larger value right at the edge of the finite region.
    for (int side : {-1, 1}) {
      long long j = static_cast<long long>(best) + side;
      if (j < 0 || j >= static_cast<long long>(n) || !vals[j].is_neg_inf()) continue;
      double a = pts[best];
      double b = pts[static_cast<std::size_t>(j)];
      ExtReal va = vals[best];
      for (int it = 0; it < 80; ++it) {
        double m = 0.5 * (a + b);
        if (m == a || m == b) break;
        ExtReal vm = probe(m);
        if (vm.is_neg_inf()) {
          b = m;
        } else {
          a = m;
          va = vm;
        }
      }
      if (va.is_finite() && va.value() > out.value.value() + scaled(cfg.tol, va)) {
        out = {va, Attainment::kUncertain, a, false, 0};
      } else if (out.value < va) {
        out.value = va;
        out.arg = a;
      }
    }
    if (out.attainment == Attainment::kAttained && out.value.is_finite()) {
      double a = best > 0 ? pts[best - 1] : pts[best];
      double b = best + 1 < n ? pts[best + 1] : pts[best];
      if (vals[best > 0 ? best - 1 : best].is_finite() && vals[best + 1 < n ? best + 1 : best].is_finite() &&
          b > a) {
        auto [gx, gv] = golden(probe, a, b, pts[best], vals[best]);
        if (out.value < gv) {
          out.value = gv;
          out.arg = gx;
        }
      }
    }
  }
  out.evaluations = n + probe.evaluations;
  return out;
}

SearchResult minimize(const ScalarFn& fn, const Interval& dom, std::span<const double> critical,
                      const SearchConfig& cfg, Sampling sampling) {
  ScalarFn neg = [&fn](double x) { return -fn(x); };
  SearchResult r = maximize(neg, dom, critical, cfg, sampling);
  r.value = -r.value;
  return r;
}

}  // namespace ecdc
