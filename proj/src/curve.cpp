#include "ecdc/curve.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "ecdc/error.hpp"

namespace ecdc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Candidate {
  ExtReal value;
  bool attained;
  std::optional<double> arg;
};

Extremum pick_max(const std::vector<Candidate>& cands) {
  Extremum best;
  for (const auto& c : cands) best = merge_sup(best, Extremum{c.value, c.attained, c.arg});
  return best;
}

// Linear case: a*x + b on dom.
Extremum sup_linear(double a, double b, const Interval& dom) {
  if (dom.is_point()) return {ExtReal(a * dom.lo.at + b), true, dom.lo.at};
  if (a > 0) {
    if (dom.hi.is_unbounded()) return {ExtReal::pos_inf(), false, std::nullopt};
    return {ExtReal(a * dom.hi.at + b), dom.hi.is_closed(), dom.hi.at};
  }
  if (a < 0) {
    if (dom.lo.is_unbounded()) return {ExtReal::pos_inf(), false, std::nullopt};
    return {ExtReal(a * dom.lo.at + b), dom.lo.is_closed(), dom.lo.at};
  }
  return {ExtReal(b), true, dom.representative()};
}

}  // namespace

double Curve::operator()(double x) const {
  if (c == 0.0) return a * x + b;
  return a * x + b - c * std::sqrt(-x);
}

double Curve::slope(double x) const {
  if (c == 0.0) return a;
  if (x >= 0.0) return c > 0 ? kInf : -kInf;
  return a + c / (2.0 * std::sqrt(-x));
}

bool ties(const ExtReal& a, const ExtReal& b) {
  if (a.is_finite() && b.is_finite()) {
    double scale = 1.0 + std::max(std::abs(a.value()), std::abs(b.value()));
    return std::abs(a.value() - b.value()) <= 1e-12 * scale;
  }
  return a == b;
}

Extremum merge_sup(const Extremum& x, const Extremum& y) {
  if (!ties(x.value, y.value)) return x.value < y.value ? y : x;
  const Extremum& keep = (x.attained || !y.attained) ? x : y;
  return {max(x.value, y.value), x.attained || y.attained, keep.arg};
}

Extremum merge_inf(const Extremum& x, const Extremum& y) {
  if (!ties(x.value, y.value)) return y.value < x.value ? y : x;
  const Extremum& keep = (x.attained || !y.attained) ? x : y;
  return {min(x.value, y.value), x.attained || y.attained, keep.arg};
}

Extremum sup_on(const Curve& q, const Interval& dom) {
  if (dom.empty()) return {ExtReal::neg_inf(), false, std::nullopt};
  if (q.c == 0.0) return sup_linear(q.a, q.b, dom);

  if (dom.hi.is_unbounded() || dom.hi.at > 0.0) {
    throw Error(ErrorCode::kUnsupportedFormula, "square-root curve evaluated outside x <= 0");
  }
  // Substitute x = -t^2, t >= 0: p(t) = -a t^2 - c t + b. The upper x-end maps
  // to the lower t-end and vice versa.
  const double qa = -q.a;
  const double qb = -q.c;
  const double qc = q.b;
  auto p = [&](double t) { return (qa * t + qb) * t + qc; };
  auto x_of = [](double t) { return -t * t; };

  const double t_lo = std::sqrt(-dom.hi.at);
  const bool t_lo_closed = dom.hi.is_closed();
  const bool t_hi_unbounded = dom.lo.is_unbounded();
  const double t_hi = t_hi_unbounded ? kInf : std::sqrt(-dom.lo.at);
  const bool t_hi_closed = dom.lo.is_closed();

  std::vector<Candidate> cands;
  cands.push_back({ExtReal(p(t_lo)), t_lo_closed, x_of(t_lo)});
  if (t_hi_unbounded) {
    ExtReal lim;
    if (qa != 0.0) {
      lim = qa > 0 ? ExtReal::pos_inf() : ExtReal::neg_inf();
    } else if (qb != 0.0) {
      lim = qb > 0 ? ExtReal::pos_inf() : ExtReal::neg_inf();
    } else {
      lim = ExtReal(qc);
    }
    cands.push_back({lim, false, std::nullopt});
  } else {
    cands.push_back({ExtReal(p(t_hi)), t_hi_closed, x_of(t_hi)});
  }
  if (qa < 0.0) {
    double t0 = -qb / (2.0 * qa);
    if (t0 > t_lo && t0 < t_hi) cands.push_back({ExtReal(p(t0)), true, x_of(t0)});
  } else if (qa == 0.0 && qb == 0.0) {
    cands.push_back({ExtReal(qc), true, dom.representative()});
  }
  return pick_max(cands);
}

Extremum inf_on(const Curve& q, const Interval& dom) {
  if (dom.empty()) return {ExtReal::pos_inf(), false, std::nullopt};
  Extremum e = sup_on(-q, dom);
  e.value = -e.value;
  return e;
}

}  // namespace ecdc
