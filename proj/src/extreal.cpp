#include "ecdc/extreal.hpp"

#include <sstream>

namespace ecdc {

std::string ExtReal::to_string() const {
  if (is_pos_inf()) return "+inf";
  if (is_neg_inf()) return "-inf";
  std::ostringstream os;
  os.precision(17);
  os << value_;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const ExtReal& v) { return os << v.to_string(); }

}  // namespace ecdc
