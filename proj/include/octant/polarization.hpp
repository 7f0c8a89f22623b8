#pragma once

// Sharp pointwise bound Psi on the sector sup-norm of the differential
// DP(x, y), the branch curves D11..D102 behind it, the numeric sup-norm of a
// symmetric bilinear form over the sector squared, and the polarization
// constant of the space.
//
// For unit-norm P and a sector point (x, y), the differential DP(x, y) is the
// linear form v -> grad P(x, y) . v, and
//   ||DP(x, y)||  =  sup { |grad P . (cos t, sin t)| : t in [0, pi/4] }
//                 <= psi(x, y),
// with equality at every point.  psi is piecewise in lambda = y/x with four
// branches (regions half-open to the right, the last closed), 1-homogeneous
// in (x, y), and maximal on the unit arc at theta = pi/4 with value
// 4 + sqrt2.  Half of that maximum, 2 + sqrt2/2, is the polarization
// constant: the least C with ||L|| <= C ||P|| for the polar form L of P.
//
// The branch curves D_{i,j}(lambda) are the candidate suprema produced by the
// ten case distinctions of the underlying maximization (case i, branch j);
// they are exposed for figure reproduction and dominance checks.  On the
// lambda ranges where a case wins, 2 D_{i,j}(lambda) equals psi(1, lambda).

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "octant/oracle.hpp"
#include "octant/poly.hpp"

namespace octant {

// Branch boundaries of psi in the slope lambda = y/x.
inline constexpr double psi_lambda_1 = (2.0 * std::numbers::sqrt2 - 1.0) / 7.0;
inline constexpr double psi_lambda_2 = std::numbers::sqrt2 - 1.0;
inline constexpr double psi_lambda_3 = 2.0 - std::numbers::sqrt2;

// Maximum of psi over the unit arc: 4 + sqrt2, attained at theta = pi/4 (and
// also at theta = 0).
inline constexpr double psi_max_value = 4.0 + std::numbers::sqrt2;

// The polarization constant 2 + sqrt2 / 2 = (4 + sqrt2) / 2.
inline constexpr double polarization_value = 2.0 + std::numbers::sqrt2 / 2.0;

// Sharp pointwise bound on ||DP(x, y)|| for unit-norm P; 1-homogeneous.
// Rejects the origin.  Points with y = 0 take the first branch and points
// with y = x the fourth, matching the half-open region convention.
inline double psi(const SectorPoint& pt) {
  const double x = pt.x();
  const double y = pt.y();
  if (x == 0.0) {
    throw std::domain_error("psi: undefined at the origin");
  }
  const double lam = y / x;
  constexpr double sqrt2 = std::numbers::sqrt2;
  if (lam < psi_lambda_1) {
    return sqrt2 * ((1.0 + 2.0 * sqrt2) * x - (3.0 + 2.0 * sqrt2) * y);
  }
  if (lam < psi_lambda_2) {
    return sqrt2 * (x * x + 3.0 * y * y) / (2.0 * y);
  }
  if (lam < psi_lambda_3) {
    return 2.0 * (x + y * y / (x - y));
  }
  return 4.0 * (1.0 + sqrt2) * y - 2.0 * x;
}

// ||DP(x, y)|| exactly: the sup over the arc of the absolute value of the
// linear form with coefficients grad P(x, y).
inline double differential_norm(const Poly& p, const SectorPoint& pt) {
  const Vec2 g = gradient(p, pt);
  return sup_linear(g.x, g.y);
}

// Branch curves of the differential bound, as functions of lambda.  Case i,
// branch j covers one sub-interval of [0, 1]; several cases share formulas
// (D31 = D51 = D81 = D101, D32 = D42, D52 = D82, D71 = D91, D83 = D92 on the
// respective overlaps).
enum class BranchD {
  D11,
  D12,
  D21,
  D22,
  D31,
  D32,
  D41,
  D42,
  D51,
  D52,
  D53,
  D6,
  D71,
  D72,
  D81,
  D82,
  D83,
  D91,
  D92,
  D101,
  D102,
};

inline const char* branch_label(BranchD id) {
  switch (id) {
    case BranchD::D11:
      return "D11";
    case BranchD::D12:
      return "D12";
    case BranchD::D21:
      return "D21";
    case BranchD::D22:
      return "D22";
    case BranchD::D31:
      return "D31";
    case BranchD::D32:
      return "D32";
    case BranchD::D41:
      return "D41";
    case BranchD::D42:
      return "D42";
    case BranchD::D51:
      return "D51";
    case BranchD::D52:
      return "D52";
    case BranchD::D53:
      return "D53";
    case BranchD::D6:
      return "D6";
    case BranchD::D71:
      return "D71";
    case BranchD::D72:
      return "D72";
    case BranchD::D81:
      return "D81";
    case BranchD::D82:
      return "D82";
    case BranchD::D83:
      return "D83";
    case BranchD::D91:
      return "D91";
    case BranchD::D92:
      return "D92";
    case BranchD::D101:
      return "D101";
    default:
      return "D102";
  }
}

namespace detail {

// Interior boundary constants of the D-curve domains.
inline constexpr double d_sqrt2 = std::numbers::sqrt2;
inline constexpr double d_b31 = (1.0 + 2.0 * d_sqrt2) / 7.0;   // D31 | D32
inline constexpr double d_b41 = (1.0 + d_sqrt2) / 3.0;         // D41 | D42
inline constexpr double d_b51 = (3.0 + 4.0 * d_sqrt2) / 23.0;  // D51 | D52
inline constexpr double d_b52 = (6.0 - 2.0 * d_sqrt2) / 7.0;   // D52 | D53
inline constexpr double d_b71 = (5.0 - 3.0 * d_sqrt2) / 7.0;   // D71 | D72
inline constexpr double d_b91 = (2.0 - d_sqrt2) / 2.0;         // D91 | D92

// Shared formulas.
inline double d_line_down(double l) {  // D31 = D51 = D81 = D101
  return 0.5 * d_sqrt2 * ((1.0 + 2.0 * d_sqrt2) - (3.0 + 2.0 * d_sqrt2) * l);
}
inline double d_line_up(double l) {  // D32 = D42
  return 0.5 * d_sqrt2 * (3.0 * l - 1.0);
}
inline double d_steep_up(double l) {  // D22 = D53
  return (2.0 + 2.0 * d_sqrt2) * l - 1.0;
}
inline double d_steeper_up(double l) {  // D83 = D92
  return 2.0 * (1.0 + d_sqrt2) * l - 1.0;
}
inline double d_root(double l) {  // D52 = D82
  return std::sqrt((69.0 + 48.0 * d_sqrt2) * l * l -
                   (56.0 + 40.0 * d_sqrt2) * l + (13.0 + 8.0 * d_sqrt2));
}

}  // namespace detail

inline Interval branch_curve_d_domain(BranchD id) {
  using namespace detail;
  switch (id) {
    case BranchD::D11:
      return {0.0, 1.0};
    case BranchD::D12:
      return {0.0, 0.2};
    case BranchD::D21:
      return {0.0, psi_lambda_3};
    case BranchD::D22:
      return {psi_lambda_3, 1.0};
    case BranchD::D31:
      return {0.0, d_b31};
    case BranchD::D32:
      return {d_b31, 1.0};
    case BranchD::D41:
      return {0.0, d_b41};
    case BranchD::D42:
      return {d_b41, 1.0};
    case BranchD::D51:
      return {0.0, d_b51};
    case BranchD::D52:
      return {d_b51, d_b52};
    case BranchD::D53:
      return {d_b52, 1.0};
    case BranchD::D6:
      return {psi_lambda_2, 1.0};
    case BranchD::D71:
      return {0.0, d_b71};
    case BranchD::D72:
      return {d_b71, 1.0};
    case BranchD::D81:
      return {0.0, d_b51};
    case BranchD::D82:
      return {d_b51, d_b52};
    case BranchD::D83:
      return {d_b52, 1.0};
    case BranchD::D91:
      return {0.0, d_b91};
    case BranchD::D92:
      return {d_b91, 1.0};
    case BranchD::D101:
      return {0.0, psi_lambda_1};
    default:  // D102
      return {psi_lambda_1, 1.0};
  }
}

inline double branch_curve_d(BranchD id, double lam) {
  const Interval dom = branch_curve_d_domain(id);
  if (!dom.contains(lam)) {
    throw std::domain_error(std::string("branch_curve_d: lambda = ") +
                            format_double(lam) + " outside the domain of " +
                            branch_label(id));
  }
  using namespace detail;
  switch (id) {
    case BranchD::D11:
    case BranchD::D6:
      return std::sqrt(1.0 + lam * lam);
    case BranchD::D12:
      return (39.0 * lam * lam - 26.0 * lam + 7.0) /
             (2.0 * std::sqrt(74.0 * lam * lam - 52.0 * lam + 10.0));
    case BranchD::D21:
      return 1.0 + lam * lam / (1.0 - lam);
    case BranchD::D22:
    case BranchD::D53:
      return d_steep_up(lam);
    case BranchD::D31:
    case BranchD::D51:
    case BranchD::D81:
    case BranchD::D101:
      return d_line_down(lam);
    case BranchD::D32:
    case BranchD::D42:
      return d_line_up(lam);
    case BranchD::D41:
      return 1.0;
    case BranchD::D52:
    case BranchD::D82:
      return d_root(lam);
    case BranchD::D71:
    case BranchD::D91:
      return 1.0 - 2.0 * lam;
    case BranchD::D72:
      return 0.5 * d_sqrt2 * (1.0 + lam);
    case BranchD::D83:
    case BranchD::D92:
      return d_steeper_up(lam);
    default:  // D102
      return d_sqrt2 * (1.0 + 3.0 * lam * lam) / (4.0 * lam);
  }
}

// Numeric sup-norm of a symmetric bilinear form over the sector squared:
// sup over (t, u) in [0, pi/4]^2 of |L(e^{it}, e^{iu})|, by an inclusive
// resolution x resolution grid followed by coordinate-wise golden-section
// refinement.  The grid stage factors L(e^{it}, e^{iu}) as
// cos(t) A(u) + sin(t) B(u) with per-axis tables, which is algebraically the
// same objective evaluated by the generic 2D maximizer.
inline double bilinear_sup_norm(const SymBilinearForm& L, int resolution,
                                int refine_iters = 40) {
  if (resolution < 2) {
    throw std::invalid_argument("bilinear_sup_norm: resolution must be >= 2");
  }
  const int n = resolution;
  std::vector<double> ct(n), st(n), A(n), B(n);
  for (int i = 0; i < n; ++i) {
    const double t = detail::grid_point(0.0, sector_angle, n, i);
    ct[i] = std::cos(t);
    st[i] = std::sin(t);
  }
  for (int j = 0; j < n; ++j) {
    A[j] = L.m11 * ct[j] + L.m12 * st[j];
    B[j] = L.m12 * ct[j] + L.m22 * st[j];
  }

  Max2DResult best{0.0, 0.0, -std::numeric_limits<double>::infinity()};
  int best_i = 0;
  int best_j = 0;
  for (int i = 0; i < n; ++i) {
    const double ci = ct[i];
    const double si = st[i];
    for (int j = 0; j < n; ++j) {
      const double v = std::abs(ci * A[j] + si * B[j]);
      if (v > best.value) {
        best = {detail::grid_point(0.0, sector_angle, n, i),
                detail::grid_point(0.0, sector_angle, n, j), v};
        best_i = i;
        best_j = j;
      }
    }
  }

  auto objective = [&L](double t, double u) {
    return std::abs(eval(L, Vec2{std::cos(t), std::sin(t)},
                         Vec2{std::cos(u), std::sin(u)}));
  };
  const double ax =
      detail::grid_point(0.0, sector_angle, n, std::max(best_i - 1, 0));
  const double bx =
      detail::grid_point(0.0, sector_angle, n, std::min(best_i + 1, n - 1));
  const double ay =
      detail::grid_point(0.0, sector_angle, n, std::max(best_j - 1, 0));
  const double by =
      detail::grid_point(0.0, sector_angle, n, std::min(best_j + 1, n - 1));
  detail::golden_refine_2d(objective, ax, bx, ay, by, best, refine_iters);
  return best.value;
}

struct PolarizationConstant {
  double value = 0.0;  // least C with ||polar of P|| <= C ||P||
  Poly witness{};      // unit-norm polynomial attaining the constant
};

// The polarization constant 2 + sqrt2/2 = psi_max / 2, attained by
// (1, 5 + 4 sqrt2, -4 - 4 sqrt2).
inline PolarizationConstant polarization_constant() {
  return {polarization_value,
          Poly{1.0, 5.0 + 4.0 * std::numbers::sqrt2,
               -4.0 - 4.0 * std::numbers::sqrt2}};
}

}  // namespace octant
