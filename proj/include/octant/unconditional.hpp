#pragma once

// Unconditional constant of the canonical coefficient basis: the least C
// with || |P| || <= C ||P|| over the sector, where |P| takes coefficientwise
// absolute values.  Equivalently, the least C bounding ||sigma . P|| for
// every choice of coefficient signs sigma, since every sign pattern's norm is
// dominated by || |P| ||.
//
// The constant is 5 + 4 sqrt2, attained by (1, 5 + 4 sqrt2, -4 - 4 sqrt2):
// that polynomial has norm 1 while its modulus has norm 5 + 4 sqrt2.  Along
// the extreme families the modulus norm has the closed profiles
//   || |P_t| || = (|t| + 6 + 3t + 8 sqrt(1+t)) / 2,
//   || |Q_s| || = (1 + s + 2 sqrt(2 (1+s))) / 2,
// both nondecreasing with maximum 5 + 4 sqrt2 at the shared family junction.

#include <cmath>
#include <stdexcept>

#include "octant/extremals.hpp"
#include "octant/poly.hpp"

namespace octant {

// The unconditional constant 5 + 4 sqrt2.
inline constexpr double unconditional_value = 5.0 + 4.0 * std::numbers::sqrt2;

// || |P| || / ||P||.  Rejects the zero polynomial.
inline double modulus_norm_ratio(const Poly& p) {
  if (p.a == 0.0 && p.b == 0.0 && p.c == 0.0) {
    throw std::domain_error("modulus_norm_ratio: zero polynomial");
  }
  return sector_norm(modulus(p)) / sector_norm(p);
}

// Closed profile of || |P_t| || on the P-family, t in [-1, 1].
inline double p_modulus_profile(double t) {
  if (!(-1.0 <= t && t <= 1.0)) {
    throw std::domain_error("p_modulus_profile: t outside [-1, 1]");
  }
  return 0.5 * (std::abs(t) + 6.0 + 3.0 * t + 8.0 * std::sqrt(1.0 + t));
}

// Closed profile of || |Q_s| || on the Q-family, s in [1, 5 + 4 sqrt2].
inline double q_modulus_profile(double s) {
  if (!(1.0 <= s && s <= s_max)) {
    throw std::domain_error("q_modulus_profile: s outside [1, 5 + 4 sqrt2]");
  }
  return 0.5 * (1.0 + s + 2.0 * std::sqrt(2.0 * (1.0 + s)));
}

struct UnconditionalConstant {
  double value = 0.0;  // maximum of modulus_norm_ratio over the unit ball
  Poly witness{};      // unit-norm polynomial attaining it
};

// The unconditional constant computed live: the modulus-norm ratio is a
// convex functional on the unit ball, so its maximum is attained at an
// extreme point and a family scan at the given resolution finds it.
inline UnconditionalConstant unconditional_constant(int resolution) {
  const auto scan = scan_extremes(
      [](const Poly& q) { return modulus_norm_ratio(q); }, resolution);
  return {scan.value, p_family(1.0)};
}

}  // namespace octant
