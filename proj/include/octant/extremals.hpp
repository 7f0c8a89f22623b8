#pragma once

// Extreme points of the unit ball of the space of 2-homogeneous polynomials
// on the pi/4 sector, and a generic scanner that maximizes a continuous
// convex functional over them.
//
// The unit ball's extreme points are exactly
//   +-P_t = +-(t, 4 + t + 4 sqrt(1+t), -2 - 2t - 4 sqrt(1+t)),  t in [-1, 1],
//   +-Q_s = +-(1, s, -2 sqrt(2 (1+s))),                         s in [1, 5+4 sqrt2],
//   +-(1, 1, 0).
// The families meet: P_1 = Q_{5+4 sqrt2}.  A convex functional attains its
// maximum over the ball at one of these points, so a 1D scan per family plus
// the two isolated corner candidates is a global maximization over the ball.

#include <cmath>
#include <stdexcept>
#include <string>

#include "octant/oracle.hpp"
#include "octant/poly.hpp"

namespace octant {

// Right endpoint of the Q-family parameter range, 5 + 4 sqrt2.
inline constexpr double s_max = 5.0 + 4.0 * std::numbers::sqrt2;

// P_t = (t, 4 + t + 4 sqrt(1+t), -2 - 2t - 4 sqrt(1+t)), t in [-1, 1].
inline Poly p_family(double t) {
  if (!(-1.0 <= t && t <= 1.0)) {
    throw std::domain_error("p_family: t = " + format_double(t) +
                            " outside [-1, 1]");
  }
  const double r = std::sqrt(1.0 + t);
  return {t, 4.0 + t + 4.0 * r, -2.0 - 2.0 * t - 4.0 * r};
}

// Q_s = (1, s, -2 sqrt(2 (1+s))), s in [1, 5 + 4 sqrt2].
inline Poly q_family(double s) {
  if (!(1.0 <= s && s <= s_max)) {
    throw std::domain_error("q_family: s = " + format_double(s) +
                            " outside [1, 5 + 4 sqrt2]");
  }
  return {1.0, s, -2.0 * std::sqrt(2.0 * (1.0 + s))};
}

// The isolated extreme point (1, 1, 0).
inline Poly corner() { return {1.0, 1.0, 0.0}; }

enum class Family { P, Q, Corner };

inline const char* family_name(Family f) {
  switch (f) {
    case Family::P:
      return "P";
    case Family::Q:
      return "Q";
    default:
      return "corner";
  }
}

// Tagged parameter selecting one extreme polynomial: param is t for family P,
// s for family Q, and unused (0) for the corner; sign is +-1.
struct ExtremalParam {
  Family family = Family::Corner;
  double param = 0.0;
  int sign = +1;
};

inline Poly to_poly(const ExtremalParam& e) {
  Poly p;
  switch (e.family) {
    case Family::P:
      p = p_family(e.param);
      break;
    case Family::Q:
      p = q_family(e.param);
      break;
    default:
      p = corner();
      break;
  }
  const double s = static_cast<double>(e.sign);
  return {s * p.a, s * p.b, s * p.c};
}

struct ExtremeScanResult {
  double value = 0.0;
  ExtremalParam argmax{};
};

// Maximum of f over all extreme points of the unit ball: a grid-plus-golden
// scan (resolution samples, refine_iters contractions) over each signed
// family and direct evaluation at the two signed corners.  Candidates are
// visited in the order P+, P-, Q+, Q-, corner+, corner- and replaced only on
// strict improvement, and the per-family grid argmax takes the first (i.e.
// smallest-parameter) maximizer, so ties resolve deterministically toward the
// earlier family and the smaller parameter.
template <class F>
ExtremeScanResult scan_extremes(F&& f, int resolution, int refine_iters = 60) {
  if (resolution < 2) {
    throw std::invalid_argument("scan_extremes: resolution must be >= 2");
  }
  const ScanConfig cfg{resolution, refine_iters, 0};

  ExtremeScanResult best{-std::numeric_limits<double>::infinity(), {}};
  auto consider = [&best](double value, Family family, double param,
                          int sign) {
    if (value > best.value) best = {value, {family, param, sign}};
  };

  for (const int sign : {+1, -1}) {
    const double s = static_cast<double>(sign);
    const auto r = max_1d(
        [&](double t) {
          const Poly p = p_family(t);
          return f(Poly{s * p.a, s * p.b, s * p.c});
        },
        -1.0, 1.0, cfg);
    consider(r.value, Family::P, r.x, sign);
  }
  for (const int sign : {+1, -1}) {
    const double s = static_cast<double>(sign);
    const auto r = max_1d(
        [&](double sq) {
          const Poly p = q_family(sq);
          return f(Poly{s * p.a, s * p.b, s * p.c});
        },
        1.0, s_max, cfg);
    consider(r.value, Family::Q, r.x, sign);
  }
  for (const int sign : {+1, -1}) {
    const double s = static_cast<double>(sign);
    const Poly p = corner();
    const double v = f(Poly{s * p.a, s * p.b, s * p.c});
    detail::require_finite(v, "scan_extremes", s);
    consider(v, Family::Corner, 0.0, sign);
  }
  return best;
}

}  // namespace octant
