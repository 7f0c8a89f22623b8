#pragma once

// Deterministic numeric formatting shared by the library and the CLI.
//
// All user-visible numbers are printed with the shortest decimal
// representation that round-trips to the same double.  This makes CSV and
// report output bit-stable across runs and lets external tools recover the
// exact binary values.

#include <charconv>
#include <cstdio>
#include <string>

namespace octant {

// Shortest round-trip decimal representation of a double ("1", "0.5",
// "97.25483399593904", "1e-10", ...).  Negative zero is normalized to "0".
inline std::string format_double(double value) {
  if (value == 0.0) value = 0.0;  // drop the sign of -0.0
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  (void)ec;  // a 32-byte buffer always suffices for double
  return std::string(buf, ptr);
}

// Compact scientific form used for gaps and tolerances in diagnostics
// ("3.142e-07").  Deterministic but not meant to round-trip.
inline std::string format_gap(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3e", value);
  return std::string(buf);
}

}  // namespace octant
