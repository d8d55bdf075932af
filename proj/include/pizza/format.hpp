#pragma once

#include <cstdio>
#include <string>

namespace pizza {

/// Round-trip-safe decimal form (17 significant digits) used for all emitted numbers.
inline std::string g17(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

}  // namespace pizza
