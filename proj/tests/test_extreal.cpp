#include <doctest.h>

#include <sstream>

#include "ecdc/extreal.hpp"

using ecdc::ExtReal;

TEST_CASE("extended reals reject NaN and classify infinities") {
  CHECK_THROWS_AS(ExtReal(std::nan("")), std::invalid_argument);
  CHECK(ExtReal(HUGE_VAL).is_pos_inf());
  CHECK(ExtReal(-HUGE_VAL).is_neg_inf());
  CHECK(ExtReal(2.5).is_finite());
  CHECK_THROWS_AS(ExtReal::pos_inf().value(), std::logic_error);
}

TEST_CASE("negative zero is folded") {
  CHECK(ExtReal(-0.0).to_string() == ExtReal(0.0).to_string());
  CHECK(std::signbit((-ExtReal(0.0)).value()) == false);
}

TEST_CASE("ordering puts -inf below every finite value below +inf") {
  const ExtReal lo = ExtReal::neg_inf();
  const ExtReal hi = ExtReal::pos_inf();
  CHECK(lo < ExtReal(-1e300));
  CHECK(ExtReal(1e300) < hi);
  CHECK(lo < hi);
  CHECK(hi == hi);
  CHECK(max(lo, ExtReal(3.0)) == ExtReal(3.0));
  CHECK(min(hi, ExtReal(3.0)) == ExtReal(3.0));
}

TEST_CASE("conjugate addition lets -inf win") {
  const ExtReal p = ExtReal::pos_inf();
  const ExtReal n = ExtReal::neg_inf();
  CHECK(add_conj(p, n).is_neg_inf());
  CHECK(add_conj(n, p).is_neg_inf());
  CHECK(add_conj(p, ExtReal(1.0)).is_pos_inf());
  CHECK(add_conj(ExtReal(1.5), ExtReal(2.0)) == ExtReal(3.5));
  CHECK(sub_conj(p, p).is_neg_inf());
}

TEST_CASE("DC subtraction keeps +inf - +inf at +inf") {
  const ExtReal p = ExtReal::pos_inf();
  CHECK(sub_dc(p, p).is_pos_inf());
  CHECK(sub_dc(ExtReal(1.0), p).is_neg_inf());
  CHECK(sub_dc(p, ExtReal(1.0)).is_pos_inf());
  CHECK(sub_dc(ExtReal::neg_inf(), ExtReal::neg_inf()).is_neg_inf());
  CHECK(sub_dc(ExtReal(4.0), ExtReal(1.0)) == ExtReal(3.0));
}

TEST_CASE("near compares infinities exactly") {
  CHECK(near(ExtReal(1.0), ExtReal(1.0 + 1e-10), 1e-9));
  CHECK_FALSE(near(ExtReal(1.0), ExtReal::pos_inf(), 1e9));
  CHECK(near(ExtReal::neg_inf(), ExtReal::neg_inf(), 0.0));
}

TEST_CASE("printing") {
  std::ostringstream os;
  os << ExtReal::pos_inf() << ' ' << ExtReal::neg_inf() << ' ' << ExtReal(0.5);
  CHECK(os.str() == "+inf -inf 0.5");
}
