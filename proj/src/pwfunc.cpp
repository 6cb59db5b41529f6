#include "ecdc/pwfunc.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ecdc/error.hpp"

namespace ecdc {

namespace {

struct CurveOf {
  Curve operator()(const Affine& f) const { return {f.a, f.b, 0.0}; }
  Curve operator()(const NegSqrt& f) const { return {0.0, 0.0, f.c}; }
  Curve operator()(const PointValue& f) const { return {0.0, f.v, 0.0}; }
};

[[noreturn]] void invalid(const std::string& msg) { throw Error(ErrorCode::kValidation, msg); }

}  // namespace

Curve Piece::curve() const { return std::visit(CurveOf{}, formula); }

std::string to_string(const Formula& formula) {
  std::ostringstream os;
  if (const auto* f = std::get_if<Affine>(&formula)) os << f->a << "*x + " << f->b;
  if (const auto* f = std::get_if<NegSqrt>(&formula)) os << "-" << f->c << "*sqrt(-x)";
  if (const auto* f = std::get_if<PointValue>(&formula)) os << "point " << f->v;
  return os.str();
}

PiecewiseFunction::PiecewiseFunction(std::vector<Piece> pieces, double tol) : pieces_(std::move(pieces)) {
  validate(tol);
  domain_ = Interval{pieces_.front().dom.lo, pieces_.back().dom.hi};
}

PiecewiseFunction PiecewiseFunction::indicator(const Interval& set) {
  if (set.is_point()) return PiecewiseFunction({Piece{set, PointValue{0.0}}});
  return PiecewiseFunction({Piece{set, Affine{0.0, 0.0}}});
}

PiecewiseFunction PiecewiseFunction::affine(double a, double b, const Interval& dom) {
  if (dom.is_point()) return PiecewiseFunction({Piece{dom, PointValue{a * dom.lo.at + b}}});
  return PiecewiseFunction({Piece{dom, Affine{a, b}}});
}

void PiecewiseFunction::validate(double tol) const {
  if (pieces_.empty()) invalid("function has no pieces (domain must be nonempty)");
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    const Piece& p = pieces_[i];
    if (p.dom.empty()) invalid("piece " + std::to_string(i) + " has an empty interval");
    if (p.dom.is_point() != p.is_point()) {
      invalid("piece " + std::to_string(i) + ": degenerate intervals must carry a point value and vice versa");
    }
    if (const auto* ns = std::get_if<NegSqrt>(&p.formula)) {
      if (!(ns->c >= 0.0)) invalid("negsqrt coefficient must be >= 0");
      if (p.dom.hi.is_unbounded() || p.dom.hi.at > 0.0) invalid("negsqrt piece must satisfy hi <= 0");
    }
    Curve q = p.curve();
    if (!std::isfinite(q.a) || !std::isfinite(q.b) || !std::isfinite(q.c)) invalid("non-finite coefficient");
    if (i > 0 && p.dom.lo.is_unbounded()) invalid("only the first piece may be unbounded below");
    if (i + 1 < pieces_.size() && p.dom.hi.is_unbounded()) invalid("only the last piece may be unbounded above");
    if (i > 0) {
      const Piece& prev = pieces_[i - 1];
      if (prev.dom.hi.at != p.dom.lo.at) invalid("pieces must be sorted and leave no gap inside the domain");
      if (prev.dom.hi.is_closed() == p.dom.lo.is_closed()) {
        invalid("adjacent pieces must share their common endpoint exactly once");
      }
    }
  }

  // Convexity: continuity and nondecreasing slopes at interior junctions,
  // upward-only jumps at closed domain ends.
  std::vector<double> bps = breakpoints();
  for (double p : bps) {
    const Piece* left = nullptr;
    const Piece* right = nullptr;
    for (const Piece& pc : pieces_) {
      if (pc.is_point()) continue;
      if (!pc.dom.hi.is_unbounded() && pc.dom.hi.at == p) left = &pc;
      if (!pc.dom.lo.is_unbounded() && pc.dom.lo.at == p) right = &pc;
    }
    ExtReal v = evaluate(p);
    auto scale = [&](double x) { return tol * (1.0 + std::abs(x)); };
    if (left && right) {
      double vl = left->curve()(p);
      double vr = right->curve()(p);
      double vp = v.value();
      if (std::abs(vl - vp) > scale(vp) || std::abs(vr - vp) > scale(vp)) {
        invalid("function is not convex: jump at interior point " + std::to_string(p));
      }
      if (left->curve().slope(p) > right->curve().slope(p) + tol) {
        invalid("function is not convex: slope decreases at " + std::to_string(p));
      }
    } else if ((left || right) && v.is_finite()) {
      double lim = (left ? left : right)->curve()(p);
      if (v.value() < lim - scale(lim)) invalid("function is not convex: downward jump at domain end");
    }
  }
}

bool PiecewiseFunction::is_piecewise_affine() const {
  return std::none_of(pieces_.begin(), pieces_.end(),
                      [](const Piece& p) { return std::holds_alternative<NegSqrt>(p.formula); });
}

ExtReal PiecewiseFunction::evaluate(double x) const {
  for (const Piece& p : pieces_) {
    if (p.dom.contains(x)) return ExtReal(p.curve()(x));
  }
  return ExtReal::pos_inf();
}

std::vector<double> PiecewiseFunction::breakpoints() const {
  std::vector<double> out;
  for (const Piece& p : pieces_) {
    if (!p.dom.lo.is_unbounded()) out.push_back(p.dom.lo.at);
    if (!p.dom.hi.is_unbounded()) out.push_back(p.dom.hi.at);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<double> PiecewiseFunction::slopes() const {
  std::vector<double> out;
  for (const Piece& p : pieces_) {
    if (const auto* a = std::get_if<Affine>(&p.formula)) out.push_back(a->a);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<PiecewiseFunction> PiecewiseFunction::restricted_to(const Interval& set) const {
  std::vector<Piece> kept;
  for (const Piece& p : pieces_) {
    Interval d = intersect(p.dom, set);
    if (d.empty()) continue;
    if (d.is_point() && !p.is_point()) {
      kept.push_back(Piece{d, PointValue{p.curve()(d.lo.at)}});
    } else {
      kept.push_back(Piece{d, p.formula});
    }
  }
  if (kept.empty()) return std::nullopt;
  return PiecewiseFunction(std::move(kept));
}

bool halfspace_gate(const Interval& dom, double ystar, double alpha) {
  if (ystar == 0.0) return alpha > 0.0;
  const Bound& end = ystar > 0 ? dom.hi : dom.lo;
  if (end.is_unbounded()) return false;
  double s = ystar * end.at;
  return end.is_closed() ? s < alpha : s <= alpha;
}

Extremum fenchel_conjugate(const PiecewiseFunction& f, double xstar) {
  Extremum best{ExtReal::neg_inf(), false, std::nullopt};
  for (const Piece& p : f.pieces()) {
    Curve q = p.curve();
    best = merge_sup(best, sup_on(Curve{xstar - q.a, -q.b, -q.c}, p.dom));
  }
  return best;
}

Extremum fenchel_conjugate_numeric(const std::function<double(double)>& f, const NumericOracle& oracle,
                                   double xstar) {
  if (oracle.dom.lo.is_unbounded() || oracle.dom.hi.is_unbounded() || oracle.points < 2) {
    throw Error(ErrorCode::kUnsupportedFormula, "numeric conjugate oracle needs a bounded sampling interval");
  }
  Extremum best{ExtReal::neg_inf(), false, std::nullopt};
  const double lo = oracle.dom.lo.at;
  const double h = (oracle.dom.hi.at - lo) / (oracle.points - 1);
  for (int i = 0; i < oracle.points; ++i) {
    double x = lo + h * i;
    if (!oracle.dom.contains(x)) continue;
    double v = xstar * x - f(x);
    if (ExtReal(v) > best.value) best = {ExtReal(v), true, x};
  }
  return best;
}

ConjDomain conj_domain(const PiecewiseFunction& f) {
  ConjDomain cd;
  cd.dom = f.domain();
  const Piece& first = f.pieces().front();
  const Piece& last = f.pieces().back();
  if (cd.dom.hi.is_unbounded()) {
    cd.fdom.hi = Bound::closed(last.curve().a);
  }
  if (cd.dom.lo.is_unbounded()) {
    Curve q = first.curve();
    cd.fdom.lo = q.c > 0.0 ? Bound::open(q.a) : Bound::closed(q.a);
  }
  return cd;
}

}  // namespace ecdc
