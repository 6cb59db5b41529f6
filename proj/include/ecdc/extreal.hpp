#pragma once

#include <cmath>
#include <compare>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

namespace ecdc {

/// Extended real number: a finite double, +inf or -inf. NaN is rejected.
///
/// Two additions are provided on purpose. `add_conj` is the convention used
/// by every conjugate computation (mixed infinities collapse to -inf), while
/// `sub_dc` is only for the DC objective f(x) - g(x), where (+inf)-(+inf) is
/// +inf. There is no operator+.
class ExtReal {
 public:
  enum class Kind { kFinite, kPosInf, kNegInf };

  constexpr ExtReal() = default;
  ExtReal(double v) {  // NOLINT(google-explicit-constructor)
    if (std::isnan(v)) throw std::invalid_argument("ExtReal: NaN is not an extended real");
    if (std::isinf(v)) {
      kind_ = v > 0 ? Kind::kPosInf : Kind::kNegInf;
    } else {
      value_ = v + 0.0;  // folds -0 into +0
    }
  }

  static constexpr ExtReal pos_inf() { return ExtReal(Kind::kPosInf); }
  static constexpr ExtReal neg_inf() { return ExtReal(Kind::kNegInf); }

  constexpr Kind kind() const { return kind_; }
  constexpr bool is_finite() const { return kind_ == Kind::kFinite; }
  constexpr bool is_pos_inf() const { return kind_ == Kind::kPosInf; }
  constexpr bool is_neg_inf() const { return kind_ == Kind::kNegInf; }

  /// Finite value; throws on an infinity.
  double value() const {
    if (!is_finite()) throw std::logic_error("ExtReal::value() on an infinite value");
    return value_;
  }
  /// Lossless mapping onto double (infinities become +-HUGE_VAL).
  constexpr double to_double() const {
    switch (kind_) {
      case Kind::kPosInf: return std::numeric_limits<double>::infinity();
      case Kind::kNegInf: return -std::numeric_limits<double>::infinity();
      default: return value_;
    }
  }

  constexpr ExtReal operator-() const {
    switch (kind_) {
      case Kind::kPosInf: return neg_inf();
      case Kind::kNegInf: return pos_inf();
      default: return ExtReal(Kind::kFinite, 0.0 - value_);
    }
  }

  friend constexpr bool operator==(const ExtReal& a, const ExtReal& b) {
    return a.kind_ == b.kind_ && (a.kind_ != Kind::kFinite || a.value_ == b.value_);
  }
  friend constexpr std::partial_ordering operator<=>(const ExtReal& a, const ExtReal& b) {
    auto rank = [](Kind k) { return k == Kind::kNegInf ? 0 : (k == Kind::kFinite ? 1 : 2); };
    if (a.kind_ != b.kind_) return rank(a.kind_) <=> rank(b.kind_);
    if (a.kind_ != Kind::kFinite) return std::partial_ordering::equivalent;
    return a.value_ <=> b.value_;
  }

  std::string to_string() const;

 private:
  constexpr explicit ExtReal(Kind k, double v = 0.0) : kind_(k), value_(v) {}

  Kind kind_ = Kind::kFinite;
  double value_ = 0.0;
};

/// Addition with -inf priority: any mix of +inf and -inf is -inf.
inline ExtReal add_conj(const ExtReal& a, const ExtReal& b) {
  if (a.is_neg_inf() || b.is_neg_inf()) return ExtReal::neg_inf();
  if (a.is_pos_inf() || b.is_pos_inf()) return ExtReal::pos_inf();
  return ExtReal(a.to_double() + b.to_double());
}

/// a - b in the conjugate convention, i.e. add_conj(a, -b).
inline ExtReal sub_conj(const ExtReal& a, const ExtReal& b) { return add_conj(a, -b); }

/// Subtraction for DC objectives: (+inf) - (+inf) = +inf, otherwise add_conj(a, -b).
inline ExtReal sub_dc(const ExtReal& a, const ExtReal& b) {
  if (a.is_pos_inf() && b.is_pos_inf()) return ExtReal::pos_inf();
  return add_conj(a, -b);
}

inline ExtReal max(const ExtReal& a, const ExtReal& b) { return a < b ? b : a; }
inline ExtReal min(const ExtReal& a, const ExtReal& b) { return b < a ? b : a; }

/// |a - b| <= tol for finite values; infinities must match exactly.
inline bool near(const ExtReal& a, const ExtReal& b, double tol) {
  if (a.is_finite() && b.is_finite()) return std::abs(a.value() - b.value()) <= tol;
  return a == b;
}

std::ostream& operator<<(std::ostream& os, const ExtReal& v);

}  // namespace ecdc
