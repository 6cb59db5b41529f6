#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ecdc/curve.hpp"
#include "ecdc/extreal.hpp"
#include "ecdc/interval.hpp"

namespace ecdc {

struct Affine {
  double a = 0.0;  // slope
  double b = 0.0;  // intercept
};

/// x -> -c * sqrt(-x), c >= 0, on x <= 0.
struct NegSqrt {
  double c = 0.0;
};

struct PointValue {
  double v = 0.0;
};

using Formula = std::variant<Affine, NegSqrt, PointValue>;

struct Piece {
  Interval dom;
  Formula formula;

  Curve curve() const;
  bool is_point() const { return std::holds_alternative<PointValue>(formula); }
};

/// Proper convex extended-real function on the real line, +inf outside its
/// pieces. Construction validates the piece layout and convexity and throws
/// Error(kValidation) otherwise.
class PiecewiseFunction {
 public:
  explicit PiecewiseFunction(std::vector<Piece> pieces, double tol = 1e-9);

  /// The zero function restricted to `set`.
  static PiecewiseFunction indicator(const Interval& set);
  static PiecewiseFunction affine(double a, double b, const Interval& dom = Interval::real_line());

  const std::vector<Piece>& pieces() const { return pieces_; }
  const Interval& domain() const { return domain_; }
  bool is_piecewise_affine() const;

  ExtReal operator()(double x) const { return evaluate(x); }
  ExtReal evaluate(double x) const;

  /// Finite piece endpoints in increasing order, duplicates removed.
  std::vector<double> breakpoints() const;
  /// Slopes of the affine pieces; the conjugate can only kink there.
  std::vector<double> slopes() const;

  /// Restriction to `set` (f + indicator of set). Returns nullopt when the
  /// restriction has empty domain.
  std::optional<PiecewiseFunction> restricted_to(const Interval& set) const;


 private:
  void validate(double tol) const;

  std::vector<Piece> pieces_;
  Interval domain_;
};

/// True iff y*x < alpha for every x in dom (strict: open half-space).
bool halfspace_gate(const Interval& dom, double ystar, double alpha);

/// sup_x { x*xstar - f(x) } with the maximiser when attained.
Extremum fenchel_conjugate(const PiecewiseFunction& f, double xstar);

/// Fenchel conjugate of a callable through a dense-grid oracle. Disabled
/// unless explicitly requested; accuracy is the grid spacing times the local
/// slope of the integrand.
struct NumericOracle {
  Interval dom;
  int points = 20001;
};
Extremum fenchel_conjugate_numeric(const std::function<double(double)>& f, const NumericOracle& oracle,
                                   double xstar);

/// dom h^c = fdom(h*) x {(y*, alpha) : dom h in H^-_{y*,alpha}}.
struct ConjDomain {
  Interval fdom;
  Interval dom;

  bool gate(double ystar, double alpha) const { return halfspace_gate(dom, ystar, alpha); }
  bool contains(double xstar, double ystar, double alpha) const {
    return fdom.contains(xstar) && gate(ystar, alpha);
  }
};

ConjDomain conj_domain(const PiecewiseFunction& f);

std::string to_string(const Formula& formula);

}  // namespace ecdc
