#pragma once

#include <limits>
#include <string>

namespace ecdc {

enum class BoundaryKind { kClosed, kOpen, kUnbounded };

struct Bound {
  double at = 0.0;  // ignored when unbounded
  BoundaryKind kind = BoundaryKind::kClosed;

  static Bound closed(double x) { return {x, BoundaryKind::kClosed}; }
  static Bound open(double x) { return {x, BoundaryKind::kOpen}; }
  static Bound unbounded() { return {0.0, BoundaryKind::kUnbounded}; }

  bool is_unbounded() const { return kind == BoundaryKind::kUnbounded; }
  bool is_closed() const { return kind == BoundaryKind::kClosed; }
  bool is_open() const { return kind == BoundaryKind::kOpen; }

  friend bool operator==(const Bound& a, const Bound& b) {
    if (a.kind != b.kind) return false;
    return a.is_unbounded() || a.at == b.at;
  }
};

/// Interval of the real line with explicit endpoint kinds. An unbounded lower
/// bound means -inf, an unbounded upper bound means +inf.
struct Interval {
  Bound lo = Bound::unbounded();
  Bound hi = Bound::unbounded();

  static Interval real_line() { return {}; }
  static Interval closed(double a, double b) { return {Bound::closed(a), Bound::closed(b)}; }
  static Interval open(double a, double b) { return {Bound::open(a), Bound::open(b)}; }
  static Interval point(double a) { return closed(a, a); }
  static Interval at_least(double a) { return {Bound::closed(a), Bound::unbounded()}; }
  static Interval greater_than(double a) { return {Bound::open(a), Bound::unbounded()}; }
  static Interval at_most(double b) { return {Bound::unbounded(), Bound::closed(b)}; }
  static Interval less_than(double b) { return {Bound::unbounded(), Bound::open(b)}; }

  double lo_value() const {
    return lo.is_unbounded() ? -std::numeric_limits<double>::infinity() : lo.at;
  }
  double hi_value() const {
    return hi.is_unbounded() ? std::numeric_limits<double>::infinity() : hi.at;
  }

  bool empty() const {
    if (lo.is_unbounded() || hi.is_unbounded()) return false;
    if (lo.at < hi.at) return false;
    return !(lo.at == hi.at && lo.is_closed() && hi.is_closed());
  }
  bool is_point() const { return !empty() && !lo.is_unbounded() && !hi.is_unbounded() && lo.at == hi.at; }

  bool contains(double x) const {
    if (!lo.is_unbounded() && (x < lo.at || (x == lo.at && lo.is_open()))) return false;
    if (!hi.is_unbounded() && (x > hi.at || (x == hi.at && hi.is_open()))) return false;
    return true;
  }

  /// Some point of the interval (midpoint when bounded). Requires !empty().
  double representative() const;

  std::string to_string() const;

  friend bool operator==(const Interval& a, const Interval& b) { return a.lo == b.lo && a.hi == b.hi; }
};

Interval intersect(const Interval& a, const Interval& b);

/// {x + s : x in a}.
Interval shifted(const Interval& a, double s);
/// {s - x : x in a}; endpoint kinds swap sides.
Interval reflected(const Interval& a, double s);
/// inner is a subset of outer.
bool includes(const Interval& outer, const Interval& inner);

}  // namespace ecdc
