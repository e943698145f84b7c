#pragma once

#include <cstdio>
#include <string>

namespace fracspec {

/// Fixed textual form for artifact output: 17 significant digits, '.' decimal.
inline std::string format_double(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

}  // namespace fracspec
