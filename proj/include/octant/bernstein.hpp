#pragma once

// Pointwise Bernstein bound on the Euclidean gradient norm and the global
// Markov constant.
//
// For every P with sup-norm 1 on the sector and every sector point (x, y),
//   ||grad P(x, y)||_2^2 <= phi_squared(x, y),
// with equality attained by some extreme polynomial; phi_squared is piecewise
// in the slope lambda = y/x with three branches meeting continuously at
// lambda = (sqrt2-1)/2, sqrt2-1 and 4 sqrt2 - 5.  Maximizing over the unit
// arc gives the Markov constant: the squared bound peaks at 4 (13 + 8 sqrt2)
// = 52 + 32 sqrt2 (attained at both arc endpoints), so the sharp constant M
// in ||grad P||_2 <= M ||P|| is sqrt(52 + 32 sqrt2).
//
// The branch curves C1..C8 are the squared gradient norms of the candidate
// extremal polynomials along (1, lambda) that arise when the bound is derived
// by maximizing over the extreme families; they are exposed for figure
// reproduction and for the dominance checks that justify the three-branch
// form.

#include <cmath>
#include <stdexcept>
#include <string>

#include "octant/poly.hpp"

namespace octant {

// Branch boundaries of phi_squared in the slope lambda = y/x.
inline constexpr double phi_lambda_1 = (std::numbers::sqrt2 - 1.0) / 2.0;
inline constexpr double phi_lambda_2 = std::numbers::sqrt2 - 1.0;
inline constexpr double phi_lambda_3 = 4.0 * std::numbers::sqrt2 - 5.0;

// The squared Markov constant 4 (13 + 8 sqrt2) = 52 + 32 sqrt2.
inline constexpr double markov_squared_value =
    52.0 + 32.0 * std::numbers::sqrt2;

namespace detail {

inline constexpr double c4_k0 = 13.0 + 8.0 * std::numbers::sqrt2;
inline constexpr double c4_k2 = 69.0 + 48.0 * std::numbers::sqrt2;
inline constexpr double c4_k1 = 28.0 + 20.0 * std::numbers::sqrt2;

// First/outer branch of phi_squared (the C4 form), valid for
// lambda in [0, (sqrt2-1)/2] and [4 sqrt2 - 5, 1]:
// 4 [(13+8 sqrt2) x^2 + (69+48 sqrt2) y^2 - 2 (28+20 sqrt2) xy].
inline double phi_outer_form(double x, double y) {
  return 4.0 * (c4_k0 * x * x + c4_k2 * y * y - 2.0 * c4_k1 * x * y);
}

// Middle branch, lambda in [(sqrt2-1)/2, sqrt2-1]: x^4 / y^2 + 4 (x^2 + y^2).
inline double phi_middle_form(double x, double y) {
  return (x * x) * (x * x) / (y * y) + 4.0 * (x * x + y * y);
}

// Inner branch, lambda in [sqrt2-1, 4 sqrt2 - 5]:
// (3 x^2 - 2 xy + 3 y^2)^2 / (2 (x - y)^2).
inline double phi_inner_form(double x, double y) {
  const double q = 3.0 * x * x - 2.0 * x * y + 3.0 * y * y;
  const double d = x - y;
  return q * q / (2.0 * d * d);
}

}  // namespace detail

// Sharp pointwise bound on ||grad P||_2^2 for unit-norm P; 2-homogeneous in
// (x, y).  Branch boundaries belong to the earlier-listed branch (outer,
// then middle, then inner); in particular the outer form owns lambda = 1, so
// no branch divides by x - y there.  Rejects the origin.
inline double phi_squared(const SectorPoint& pt) {
  const double x = pt.x();
  const double y = pt.y();
  if (x == 0.0) {
    // In the cone 0 <= y <= x, x = 0 forces (0, 0).
    throw std::domain_error("phi_squared: undefined at the origin");
  }
  const double lam = y / x;
  if (lam <= phi_lambda_1 || lam >= phi_lambda_3) {
    return detail::phi_outer_form(x, y);
  }
  if (lam <= phi_lambda_2) {
    return detail::phi_middle_form(x, y);
  }
  return detail::phi_inner_form(x, y);
}

// Sharp pointwise bound on ||grad P||_2 for unit-norm P: sqrt(phi_squared).
inline double phi(const SectorPoint& pt) { return std::sqrt(phi_squared(pt)); }

// Branch curves of the pointwise bound, as functions of lambda at the point
// (1, lambda).  Each is the squared gradient norm of one candidate extremal
// polynomial (a critical parameter of the P- or Q-family, or an endpoint):
//   C1 = 4 (1 + lambda^2)                               on [0, sqrt2-1]
//   C2 = (3 - 2 lambda + 3 lambda^2)^2 / (2 (1-lambda)^2) on [1/3, 4 sqrt2-5]
//   C3 = 4 (1 + 9 lambda^2)                             on [0, 1]
//   C4 = 4 [(13+8 sqrt2) + (69+48 sqrt2) lambda^2
//            - 2 (28+20 sqrt2) lambda]                  on [0, 1]
//   C5 = 1 / lambda^2 + 4 (1 + lambda^2)                on [(sqrt2-1)/2, 1/2]
//   C6 = 4 (1 + lambda^2)                               on [sqrt2-1, 1]
//   C7 = 4 (1 + lambda^2) + 16 (1 - lambda)^2           on [0, 1]
//   C8 = C4                                             on [0, 1]
enum class BranchC { C1, C2, C3, C4, C5, C6, C7, C8 };

inline const char* branch_label(BranchC id) {
  switch (id) {
    case BranchC::C1:
      return "C1";
    case BranchC::C2:
      return "C2";
    case BranchC::C3:
      return "C3";
    case BranchC::C4:
      return "C4";
    case BranchC::C5:
      return "C5";
    case BranchC::C6:
      return "C6";
    case BranchC::C7:
      return "C7";
    default:
      return "C8";
  }
}

inline Interval branch_curve_c_domain(BranchC id) {
  switch (id) {
    case BranchC::C1:
      return {0.0, phi_lambda_2};
    case BranchC::C2:
      return {1.0 / 3.0, phi_lambda_3};
    case BranchC::C5:
      return {phi_lambda_1, 0.5};
    case BranchC::C6:
      return {phi_lambda_2, 1.0};
    default:  // C3, C4, C7, C8
      return {0.0, 1.0};
  }
}

inline double branch_curve_c(BranchC id, double lam) {
  const Interval dom = branch_curve_c_domain(id);
  if (!dom.contains(lam)) {
    throw std::domain_error(std::string("branch_curve_c: lambda = ") +
                            format_double(lam) + " outside the domain of " +
                            branch_label(id));
  }
  switch (id) {
    case BranchC::C1:
    case BranchC::C6:
      return 4.0 * (1.0 + lam * lam);
    case BranchC::C2:
      return detail::phi_inner_form(1.0, lam);
    case BranchC::C3:
      return 4.0 * (1.0 + 9.0 * lam * lam);
    case BranchC::C5:
      return detail::phi_middle_form(1.0, lam);
    case BranchC::C7:
      return 4.0 * (1.0 + lam * lam) + 16.0 * (1.0 - lam) * (1.0 - lam);
    default:  // C4, C8
      return detail::phi_outer_form(1.0, lam);
  }
}

struct MarkovConstant {
  double squared = 0.0;  // sharp constant in ||grad P||_2^2 <= K ||P||^2
  double linear = 0.0;   // sharp constant in ||grad P||_2 <= M ||P||
  Poly witness{};        // unit-norm polynomial attaining both at (1, 0)
};

// The Markov constant of the space, in both scales, with the attaining
// polynomial (1, 5 + 4 sqrt2, -4 - 4 sqrt2).
inline MarkovConstant markov_constant() {
  return {markov_squared_value, std::sqrt(markov_squared_value),
          Poly{1.0, 5.0 + 4.0 * std::numbers::sqrt2,
               -4.0 - 4.0 * std::numbers::sqrt2}};
}

}  // namespace octant
