#pragma once

#include <cstdio>
#include <string>

namespace qg {

/// Round-trip-safe decimal form, 17 significant digits.
inline std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace qg
