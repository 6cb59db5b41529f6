#pragma once

#include <optional>

#include "ecdc/extreal.hpp"
#include "ecdc/interval.hpp"

namespace ecdc {

/// x -> a*x + b - c*sqrt(-x). With c != 0 the curve only lives on x <= 0.
/// Affine pieces, the square-root pieces and every difference or conjugate
/// integrand built from them stay inside this family.
struct Curve {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;

  double operator()(double x) const;
  /// One-sided derivative; +inf at x = 0 when c > 0.
  double slope(double x) const;

  Curve operator-() const { return {-a, -b, -c}; }
  friend Curve operator-(const Curve& p, const Curve& q) { return {p.a - q.a, p.b - q.b, p.c - q.c}; }
  friend Curve operator+(const Curve& p, const Curve& q) { return {p.a + q.a, p.b + q.b, p.c + q.c}; }
};

/// Result of a one-dimensional sup or inf.
struct Extremum {
  ExtReal value = ExtReal::neg_inf();
  bool attained = false;
  std::optional<double> arg;  // maximiser/minimiser, or the point approached
};

/// Exact supremum of a curve over an interval, honouring open endpoints.
/// An empty interval yields -inf.
Extremum sup_on(const Curve& q, const Interval& dom);
/// Exact infimum; an empty interval yields +inf.
Extremum inf_on(const Curve& q, const Interval& dom);

/// Keep the larger of two suprema; attainment survives if any tied side attains.
Extremum merge_sup(const Extremum& x, const Extremum& y);
Extremum merge_inf(const Extremum& x, const Extremum& y);

/// Relative tie tolerance used when merging closed-form extrema.
bool ties(const ExtReal& a, const ExtReal& b);

}  // namespace ecdc
