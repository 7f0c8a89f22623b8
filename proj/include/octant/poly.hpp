#pragma once

// Core types for real 2-homogeneous polynomials P(x,y) = a x^2 + b y^2 + c xy
// restricted to the closed pi/4 sector, together with the exact sup-norm over
// the sector, the trigonometric sup of a linear form over the arc, and the
// elementary derived objects (gradient, modulus, polar form).
//
// Everything here is a pure function of its arguments; values are freely
// shareable across threads.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "octant/format.hpp"

namespace octant {

// The sector is the cone 0 <= y <= x; its unit arc is {(cos t, sin t) :
// 0 <= t <= pi/4}.  All bounds in this library are homogeneous in (x, y), so
// sups over the arc and over the filled sector coincide.
inline constexpr double sector_angle = std::numbers::pi / 4.0;

// A 2-homogeneous polynomial identified with its coefficient triple:
// P(x, y) = a x^2 + b y^2 + c xy.  Coefficients are expected to be finite.
struct Poly {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

// A plane vector; used for gradients and bilinear-form arguments.
struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline double squared_length(Vec2 v) { return v.x * v.x + v.y * v.y; }
inline double length(Vec2 v) { return std::hypot(v.x, v.y); }

// A point of the closed cone 0 <= y <= x.  Construction validates the
// membership so that downstream piecewise formulas may assume it.
class SectorPoint {
 public:
  SectorPoint(double x, double y) : x_(x), y_(y) {
    if (!(std::isfinite(x) && std::isfinite(y)) || !(0.0 <= y && y <= x)) {
      throw std::domain_error("SectorPoint: require finite 0 <= y <= x, got (" +
                              format_double(x) + ", " + format_double(y) + ")");
    }
  }

  double x() const { return x_; }
  double y() const { return y_; }

  // Slope y/x in [0, 1]; requires x > 0.
  double lambda() const {
    if (x_ == 0.0) throw std::domain_error("SectorPoint::lambda: x = 0");
    return y_ / x_;
  }

 private:
  double x_;
  double y_;
};

// The point (cos theta, sin theta) of the unit arc, theta in [0, pi/4].
inline SectorPoint from_angle(double theta) {
  if (!(0.0 <= theta && theta <= sector_angle)) {
    throw std::domain_error("from_angle: theta = " + format_double(theta) +
                            " outside [0, pi/4]");
  }
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  // sin <= cos holds on [0, pi/4]; min() absorbs a possible one-ulp rounding
  // inversion at the right endpoint.
  return SectorPoint(c, std::min(s, c));
}

// P(x, y) = a x^2 + b y^2 + c xy.
inline double eval(const Poly& p, double x, double y) {
  return p.a * x * x + p.b * y * y + p.c * x * y;
}

inline double eval(const Poly& p, const SectorPoint& pt) {
  return eval(p, pt.x(), pt.y());
}

// Gradient of the quadratic form: (2a x + c y, 2b y + c x).
inline Vec2 gradient(const Poly& p, double x, double y) {
  return {2.0 * p.a * x + p.c * y, 2.0 * p.b * y + p.c * x};
}

inline Vec2 gradient(const Poly& p, const SectorPoint& pt) {
  return gradient(p, pt.x(), pt.y());
}

// Coefficientwise absolute value |P|(x,y) = |a| x^2 + |b| y^2 + |c| xy.
inline Poly modulus(const Poly& p) {
  return {std::abs(p.a), std::abs(p.b), std::abs(p.c)};
}

// The symmetric bilinear form L with L(v, v) = P(v):
// L(u, v) = m11 ux vx + m22 uy vy + m12 (ux vy + uy vx).
struct SymBilinearForm {
  double m11 = 0.0;
  double m22 = 0.0;
  double m12 = 0.0;
};

inline double eval(const SymBilinearForm& L, Vec2 u, Vec2 v) {
  return L.m11 * u.x * v.x + L.m22 * u.y * v.y +
         L.m12 * (u.x * v.y + u.y * v.x);
}

// Polar of P: the unique symmetric bilinear form restoring P on the diagonal.
inline SymBilinearForm polar_of(const Poly& p) {
  return {p.a, p.b, p.c / 2.0};
}

// sup over theta in [0, pi/4] of |a cos(theta) + b sin(theta)|.
//
// The sup of the smooth lobe sqrt(a^2 + b^2) is attained inside the arc
// exactly when the phase of (a, b) lies in [0, pi/4], i.e. when a and b have
// the same sign and |b| <= |a|; otherwise the sup sits at an endpoint of the
// arc, giving max{|a|, (sqrt2/2)|a + b|}.  The single expression below agrees
// with both regimes on their boundaries, so it is continuous in (a, b).
inline double sup_linear(double a, double b) {
  double best = std::max(std::abs(a),
                         (std::numbers::sqrt2 / 2.0) * std::abs(a + b));
  if (a * b > 0.0 && std::abs(b) <= std::abs(a)) {
    best = std::max(best, std::hypot(a, b));
  }
  return best;
}

namespace detail {

// sup-norm branch used when c and a - b are aligned, c (a - b) >= 0:
// max{|a|, |a + b + c| / 2, |a + b + sign(c) sqrt((a-b)^2 + c^2)| / 2}.
// sign(0) = 0, which collapses the third term into the second, so the two
// branches agree identically on the seam c (a - b) = 0.
inline double sector_norm_aligned(const Poly& p) {
  const double sign_c = (p.c > 0.0) ? 1.0 : (p.c < 0.0 ? -1.0 : 0.0);
  const double root = std::hypot(p.a - p.b, p.c);
  return std::max({std::abs(p.a), 0.5 * std::abs(p.a + p.b + p.c),
                   0.5 * std::abs(p.a + p.b + sign_c * root)});
}

// sup-norm branch used when c (a - b) <= 0: max{|a|, |a + b + c| / 2}.
inline double sector_norm_opposed(const Poly& p) {
  return std::max(std::abs(p.a), 0.5 * std::abs(p.a + p.b + p.c));
}

}  // namespace detail

// Exact sup-norm of P over the sector:
// sup{|P(cos t, sin t)| : t in [0, pi/4]}, by the closed two-branch formula.
inline double sector_norm(const Poly& p) {
  return (p.c * (p.a - p.b) >= 0.0) ? detail::sector_norm_aligned(p)
                                    : detail::sector_norm_opposed(p);
}

// Closed interval [lo, hi]; used for branch-curve domains.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  bool contains(double v) const { return lo <= v && v <= hi; }
};

}  // namespace octant
