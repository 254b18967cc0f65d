#include "specdens/format.hpp"

#include <cstdio>

namespace specdens {

std::string format_real(double x, int significant_digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", significant_digits, x);
  return buf;
}

}  // namespace specdens
