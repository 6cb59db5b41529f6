#include "ecdc/interval.hpp"

#include <sstream>

namespace ecdc {

double Interval::representative() const {
  if (lo.is_unbounded() && hi.is_unbounded()) return 0.0;
  if (lo.is_unbounded()) return hi.is_closed() ? hi.at : hi.at - 1.0;
  if (hi.is_unbounded()) return lo.is_closed() ? lo.at : lo.at + 1.0;
  return 0.5 * (lo.at + hi.at);
}

std::string Interval::to_string() const {
  std::ostringstream os;
  os.precision(12);
  if (lo.is_unbounded()) {
    os << "(-inf";
  } else {
    os << (lo.is_closed() ? "[" : "(") << lo.at;
  }
  os << ", ";
  if (hi.is_unbounded()) {
    os << "+inf)";
  } else {
    os << hi.at << (hi.is_closed() ? "]" : ")");
  }
  return os.str();
}

Interval intersect(const Interval& a, const Interval& b) {
  Interval r;
  // Larger lower bound wins; on a tie the open kind is the stricter one.
  if (a.lo.is_unbounded()) {
    r.lo = b.lo;
  } else if (b.lo.is_unbounded()) {
    r.lo = a.lo;
  } else if (a.lo.at != b.lo.at) {
    r.lo = a.lo.at > b.lo.at ? a.lo : b.lo;
  } else {
    r.lo = a.lo.is_open() ? a.lo : b.lo;
  }
  if (a.hi.is_unbounded()) {
    r.hi = b.hi;
  } else if (b.hi.is_unbounded()) {
    r.hi = a.hi;
  } else if (a.hi.at != b.hi.at) {
    r.hi = a.hi.at < b.hi.at ? a.hi : b.hi;
  } else {
    r.hi = a.hi.is_open() ? a.hi : b.hi;
  }
  return r;
}

Interval shifted(const Interval& a, double s) {
  Interval r = a;
  if (!r.lo.is_unbounded()) r.lo.at += s;
  if (!r.hi.is_unbounded()) r.hi.at += s;
  return r;
}

Interval reflected(const Interval& a, double s) {
  Interval r{a.hi, a.lo};
  if (!r.lo.is_unbounded()) r.lo.at = s - r.lo.at;
  if (!r.hi.is_unbounded()) r.hi.at = s - r.hi.at;
  return r;
}

bool includes(const Interval& outer, const Interval& inner) {
  if (inner.empty()) return true;
  if (outer.empty()) return false;
  auto lo_ok = [&] {
    if (outer.lo.is_unbounded()) return true;
    if (inner.lo.is_unbounded()) return false;
    if (inner.lo.at != outer.lo.at) return inner.lo.at > outer.lo.at;
    return outer.lo.is_closed() || inner.lo.is_open();
  };
  auto hi_ok = [&] {
    if (outer.hi.is_unbounded()) return true;
    if (inner.hi.is_unbounded()) return false;
    if (inner.hi.at != outer.hi.at) return inner.hi.at < outer.hi.at;
    return outer.hi.is_closed() || inner.hi.is_open();
  };
  return lo_ok() && hi_ok();
}

}  // namespace ecdc
