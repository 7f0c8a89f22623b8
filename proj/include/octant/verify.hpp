#pragma once

// Cross-verification suite: every closed form in the library checked against
// the independent brute-force oracles, plus the structural identities the
// closed forms rely on (branch continuity, curve dominance, family profiles).
//
// Checks come in two tolerance classes.  Closed-form-vs-oracle comparisons
// use VerifyOptions::tolerance (default 1e-6; the oracles themselves converge
// to gaps around 1e-9, so tightening the tolerance to 0 reports those
// residual gaps as failures).  Exact-identity and continuity checks use fixed
// tolerances of 1e-12 and 1e-9 that reflect plain floating-point error and do
// not scale with the oracle resolution.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "octant/bernstein.hpp"
#include "octant/extremals.hpp"
#include "octant/figures.hpp"
#include "octant/oracle.hpp"
#include "octant/polarization.hpp"
#include "octant/poly.hpp"
#include "octant/unconditional.hpp"

namespace octant {

struct VerifyOptions {
  int samples = 1000;         // random polynomials per sampled check
  std::uint64_t seed = 42;    // corpus seed
  double tolerance = 1e-6;    // closed-form vs oracle comparisons
  int grid = 4096;            // 1D oracle grid (arc scans)
  int scan_resolution = 2048; // extreme-family scan resolution
  int refine_iters = 60;      // golden-section iterations
  int bilinear_grid = 512;    // bilinear sup-norm grid per axis
  int arc_points = 64;        // pointwise-sharpness sample count on the arc
};

struct CheckResult {
  std::string name;
  bool pass = false;
  double worst = 0.0;  // worst observed gap or violation
  double tol = 0.0;
  std::string detail;  // location of the worst case
};

namespace detail {

inline std::string poly_str(const Poly& p) {
  return "(" + format_double(p.a) + ", " + format_double(p.b) + ", " +
         format_double(p.c) + ")";
}

inline CheckResult make_result(std::string name, double worst, double tol,
                               std::string detail) {
  const bool pass = worst <= tol;
  return {std::move(name), pass, worst, tol, std::move(detail)};
}

}  // namespace detail

// |sector_norm - numeric_poly_norm| <= tolerance * max(1, value) on the
// random corpus.
inline CheckResult check_norm_oracle(const VerifyOptions& opt) {
  const ScanConfig cfg{opt.grid, opt.refine_iters, opt.seed};
  double worst = 0.0;
  Poly worst_p{};
  for (const Poly& p : random_polys(opt.samples, opt.seed)) {
    const double closed = sector_norm(p);
    const double oracle = numeric_poly_norm(p, cfg);
    const double gap = std::abs(closed - oracle) / std::max(1.0, closed);
    if (gap > worst) {
      worst = gap;
      worst_p = p;
    }
  }
  return detail::make_result("norm-oracle", worst, opt.tolerance,
                             "worst at " + detail::poly_str(worst_p));
}

// Both extreme families lie on the unit sphere: sector_norm = 1 within 1e-12
// on 1000-point parameter grids.
inline CheckResult check_extremal_unit_norm(const VerifyOptions&) {
  const int n = 1000;
  double worst = 0.0;
  std::string where = "none";
  for (int i = 0; i < n; ++i) {
    const double t = -1.0 + 2.0 * i / (n - 1);
    const double gap = std::abs(sector_norm(p_family(t)) - 1.0);
    if (gap > worst) {
      worst = gap;
      where = "P family, t = " + format_double(t);
    }
    const double s = 1.0 + (s_max - 1.0) * i / (n - 1);
    const double gap_q = std::abs(sector_norm(q_family(s)) - 1.0);
    if (gap_q > worst) {
      worst = gap_q;
      where = "Q family, s = " + format_double(s);
    }
  }
  return detail::make_result("extremal-unit-norm", worst, 1e-12, where);
}

// phi_squared matches the extreme-family maximum of ||grad P||_2^2 at
// arc_points points of the unit arc, relatively.
inline CheckResult check_phi_sharpness(const VerifyOptions& opt) {
  double worst = 0.0;
  double worst_theta = 0.0;
  for (int k = 0; k < opt.arc_points; ++k) {
    const double theta = sector_angle * k / (opt.arc_points - 1);
    const SectorPoint pt = from_angle(theta);
    const double closed = phi_squared(pt);
    const double scanned =
        scan_extremes(
            [&pt](const Poly& q) { return squared_length(gradient(q, pt)); },
            opt.scan_resolution, opt.refine_iters)
            .value;
    const double gap = std::abs(closed - scanned) / std::abs(closed);
    if (gap > worst) {
      worst = gap;
      worst_theta = theta;
    }
  }
  return detail::make_result("phi-sharpness", worst, opt.tolerance,
                             "worst at theta = " + format_double(worst_theta));
}

// Adjacent phi_squared branch formulas agree at the three branch boundaries.
inline CheckResult check_phi_continuity(const VerifyOptions&) {
  const double g1 = std::abs(branch_curve_c(BranchC::C4, phi_lambda_1) -
                             branch_curve_c(BranchC::C5, phi_lambda_1));
  const double g2 = std::abs(branch_curve_c(BranchC::C5, phi_lambda_2) -
                             branch_curve_c(BranchC::C2, phi_lambda_2));
  const double g3 = std::abs(branch_curve_c(BranchC::C2, phi_lambda_3) -
                             branch_curve_c(BranchC::C4, phi_lambda_3));
  const double worst = std::max({g1, g2, g3});
  return detail::make_result(
      "phi-continuity", worst, 1e-9,
      "gaps " + format_gap(g1) + " / " + format_gap(g2) + " / " +
          format_gap(g3) + " at the three boundaries");
}

// The global maximum over (arc point) x (extreme families) of
// ||grad P||_2^2 is 52 + 32 sqrt2, attained near theta = 0 by the P-family
// endpoint t = 1.
inline CheckResult check_markov_global(const VerifyOptions& opt) {
  auto best_gradsq_at = [&opt](double theta) {
    const SectorPoint pt = from_angle(theta);
    return scan_extremes(
               [&pt](const Poly& q) {
                 return squared_length(gradient(q, pt));
               },
               opt.scan_resolution, opt.refine_iters)
        .value;
  };
  const ScanConfig outer{512, 40, opt.seed};
  const auto global = max_1d(best_gradsq_at, 0.0, sector_angle, outer);
  const double gap =
      std::abs(global.value - markov_squared_value) / markov_squared_value;

  const SectorPoint arg_pt = from_angle(global.x);
  const auto scan = scan_extremes(
      [&arg_pt](const Poly& q) { return squared_length(gradient(q, arg_pt)); },
      opt.scan_resolution, opt.refine_iters);
  const bool witness_ok = global.x <= 1e-3 &&
                          scan.argmax.family == Family::P &&
                          std::abs(scan.argmax.param - 1.0) <= 1e-3;
  CheckResult r = detail::make_result(
      "markov-global", gap, opt.tolerance,
      "max " + format_double(global.value) + " at theta = " +
          format_double(global.x) + ", attained by " +
          detail::poly_str(to_poly(scan.argmax)));
  r.pass = r.pass && witness_ok;
  return r;
}

// psi matches the extreme-family maximum of ||DP(pt)|| at arc points.
inline CheckResult check_psi_sharpness(const VerifyOptions& opt) {
  double worst = 0.0;
  double worst_theta = 0.0;
  for (int k = 0; k < opt.arc_points; ++k) {
    const double theta = sector_angle * k / (opt.arc_points - 1);
    const SectorPoint pt = from_angle(theta);
    const double closed = psi(pt);
    const double scanned =
        scan_extremes(
            [&pt](const Poly& q) { return differential_norm(q, pt); },
            opt.scan_resolution, opt.refine_iters)
            .value;
    const double gap = std::abs(closed - scanned) / std::abs(closed);
    if (gap > worst) {
      worst = gap;
      worst_theta = theta;
    }
  }
  return detail::make_result("psi-sharpness", worst, opt.tolerance,
                             "worst at theta = " + format_double(worst_theta));
}

// The maximum of psi over the unit arc is 4 + sqrt2, attained at
// theta = pi/4.
inline CheckResult check_psi_max(const VerifyOptions& opt) {
  const ScanConfig cfg{opt.grid, opt.refine_iters, opt.seed};
  const auto global = max_1d(
      [](double theta) { return psi(from_angle(theta)); }, 0.0, sector_angle,
      cfg);
  const double gap_global = std::abs(global.value - psi_max_value);
  const double gap_at_corner =
      std::abs(psi(from_angle(sector_angle)) - psi_max_value);
  const double worst = std::max(gap_global, gap_at_corner);
  return detail::make_result(
      "psi-max", worst, 1e-9,
      "global max " + format_double(global.value) + ", value at pi/4 " +
          format_double(psi(from_angle(sector_angle))));
}

// Adjacent psi branch formulas agree at the three branch boundaries (each
// psi branch equals twice a D-curve: D31, D102, D21, D83 in order).
inline CheckResult check_psi_continuity(const VerifyOptions&) {
  const double g1 = 2.0 * std::abs(branch_curve_d(BranchD::D31, psi_lambda_1) -
                                   branch_curve_d(BranchD::D102, psi_lambda_1));
  const double g2 = 2.0 * std::abs(branch_curve_d(BranchD::D102, psi_lambda_2) -
                                   branch_curve_d(BranchD::D21, psi_lambda_2));
  const double g3 = 2.0 * std::abs(branch_curve_d(BranchD::D21, psi_lambda_3) -
                                   branch_curve_d(BranchD::D83, psi_lambda_3));
  const double worst = std::max({g1, g2, g3});
  return detail::make_result(
      "psi-continuity", worst, 1e-9,
      "gaps " + format_gap(g1) + " / " + format_gap(g2) + " / " +
          format_gap(g3) + " at the three boundaries");
}

// The bilinear sup-norm of the polar of the witness equals the polarization
// constant.
inline CheckResult check_polarization_witness(const VerifyOptions& opt) {
  const Poly w = polarization_constant().witness;
  const double v = bilinear_sup_norm(polar_of(w), opt.bilinear_grid);
  const double gap = std::abs(v - polarization_value) / polarization_value;
  return detail::make_result("polarization-witness", gap, opt.tolerance,
                             "bilinear sup-norm " + format_double(v) +
                                 " for witness " + detail::poly_str(w));
}

// No random polynomial's polar exceeds the polarization bound.
inline CheckResult check_polarization_sampled(const VerifyOptions& opt) {
  double worst = -1.0;
  Poly worst_p{};
  for (const Poly& p : random_polys(opt.samples, opt.seed)) {
    const double norm = sector_norm(p);
    if (norm == 0.0) continue;
    const double bil = bilinear_sup_norm(polar_of(p), opt.bilinear_grid);
    const double bound = polarization_value * norm;
    const double overshoot = (bil - bound) / bound;
    if (overshoot > worst) {
      worst = overshoot;
      worst_p = p;
    }
  }
  return detail::make_result("polarization-sampled", std::max(worst, 0.0),
                             opt.tolerance,
                             "largest ratio at " + detail::poly_str(worst_p));
}

// The extreme-family scan of the modulus-norm ratio returns 5 + 4 sqrt2.
inline CheckResult check_unconditional_scan(const VerifyOptions& opt) {
  const UnconditionalConstant r = unconditional_constant(opt.scan_resolution);
  const double gap = std::abs(r.value - unconditional_value);
  return detail::make_result("unconditional-scan", gap, 1e-9,
                             "scan value " + format_double(r.value));
}

// No random polynomial's modulus-norm ratio exceeds 5 + 4 sqrt2.
inline CheckResult check_unconditional_sampled(const VerifyOptions& opt) {
  double worst = -1.0;
  Poly worst_p{};
  for (const Poly& p : random_polys(opt.samples, opt.seed)) {
    if (p.a == 0.0 && p.b == 0.0 && p.c == 0.0) continue;
    const double overshoot =
        (modulus_norm_ratio(p) - unconditional_value) / unconditional_value;
    if (overshoot > worst) {
      worst = overshoot;
      worst_p = p;
    }
  }
  return detail::make_result("unconditional-sampled", std::max(worst, 0.0),
                             1e-9,
                             "largest ratio at " + detail::poly_str(worst_p));
}

// Every coefficient sign pattern's norm is dominated by the modulus norm.
inline CheckResult check_sign_patterns(const VerifyOptions& opt) {
  double worst = 0.0;
  Poly worst_p{};
  for (const Poly& p : random_polys(opt.samples, opt.seed)) {
    if (p.a == 0.0 && p.b == 0.0 && p.c == 0.0) continue;
    const double m = sector_norm(modulus(p));
    for (const double sa : {1.0, -1.0}) {
      for (const double sb : {1.0, -1.0}) {
        for (const double sc : {1.0, -1.0}) {
          const double v = sector_norm({sa * p.a, sb * p.b, sc * p.c});
          const double overshoot = (v - m) / m;
          if (overshoot > worst) {
            worst = overshoot;
            worst_p = p;
          }
        }
      }
    }
  }
  return detail::make_result("sign-patterns", worst, 1e-9,
                             "largest overshoot at " +
                                 detail::poly_str(worst_p));
}

namespace detail {

template <class Branch>
struct Dominance {
  const char* name;
  Branch low;   // curve required to stay below
  Branch high;  // dominating curve
  double lo;
  double hi;
};

// max over a 200-point grid of low(lambda) - high(lambda).
template <class Branch, class Eval>
CheckResult check_dominance(const char* check_name,
                            const std::vector<Dominance<Branch>>& relations,
                            Eval&& value_at, double tol) {
  double worst = -std::numeric_limits<double>::infinity();
  std::string where = "none";
  for (const auto& rel : relations) {
    for (int i = 0; i < 200; ++i) {
      const double lam = rel.lo + (rel.hi - rel.lo) * i / 199.0;
      const double violation = value_at(rel.low, lam) - value_at(rel.high, lam);
      if (violation > worst) {
        worst = violation;
        where = std::string(rel.name) + " at lambda = " + format_double(lam);
      }
    }
  }
  return make_result(check_name, worst, tol, "worst margin in " + where);
}

}  // namespace detail

// The C-curve dominance relations that reduce the Bernstein bound to its
// three branches.
inline CheckResult check_dominance_c(const VerifyOptions&) {
  using C = BranchC;
  const double half_gap = (2.0 - std::numbers::sqrt2) / 2.0;
  const std::vector<detail::Dominance<C>> relations = {
      {"C1 <= C7", C::C1, C::C7, 0.0, phi_lambda_2},
      {"C6 <= C7", C::C6, C::C7, phi_lambda_2, 1.0},
      {"C7 <= C4 (left)", C::C7, C::C4, 0.0, half_gap},
      {"C7 <= C4 (right)", C::C7, C::C4, 0.5, 1.0},
      {"C7 <= C5", C::C7, C::C5, phi_lambda_1, 0.5},
      {"C3 <= C2", C::C3, C::C2, 1.0 / 3.0, phi_lambda_3},
      {"C3 <= C4 (left)", C::C3, C::C4, 0.0, 1.0 / 3.0},
      {"C3 <= C4 (right)", C::C3, C::C4, phi_lambda_3, 1.0},
  };
  return detail::check_dominance(
      "dominance-c", relations,
      [](C id, double lam) { return branch_curve_c(id, lam); }, 1e-9);
}

// The D-curve dominance relations that reduce the differential bound to its
// four branches.
inline CheckResult check_dominance_d(const VerifyOptions&) {
  using D = BranchD;
  constexpr double sqrt2 = std::numbers::sqrt2;
  const double b51 = (3.0 + 4.0 * sqrt2) / 23.0;
  const double b52 = (6.0 - 2.0 * sqrt2) / 7.0;
  const double b41 = (1.0 + sqrt2) / 3.0;
  const double b71 = (5.0 - 3.0 * sqrt2) / 7.0;
  // Right end of the range where D83 stays below D102 (beyond it the Q-family
  // candidate takes over): ((4 sqrt2 - 5) sqrt(4 sqrt2 + 7) + 8 - 5 sqrt2)/7.
  const double d83_end =
      ((4.0 * sqrt2 - 5.0) * std::sqrt(4.0 * sqrt2 + 7.0) + 8.0 - 5.0 * sqrt2) /
      7.0;
  const std::vector<detail::Dominance<D>> relations = {
      {"D11 <= D21", D::D11, D::D21, 0.0, psi_lambda_3},
      {"D11 <= D22", D::D11, D::D22, psi_lambda_3, 1.0},
      {"D12 <= D31", D::D12, D::D31, 0.0, 0.2},
      {"D41 <= D21", D::D41, D::D21, 0.0, psi_lambda_3},
      {"D41 <= D22", D::D41, D::D22, psi_lambda_3, b41},
      {"D42 <= D22", D::D42, D::D22, b41, 1.0},
      {"D52 <= D21", D::D52, D::D21, b51, b52},
      {"D6 <= D82", D::D6, D::D82, psi_lambda_2, b52},
      {"D6 <= D83", D::D6, D::D83, b52, 1.0},
      {"D71 <= D101", D::D71, D::D101, 0.0, b71},
      {"D72 <= D101", D::D72, D::D101, b71, psi_lambda_1},
      {"D72 <= D102", D::D72, D::D102, psi_lambda_1, 1.0},
      {"D82 <= D102", D::D82, D::D102, b51, b52},
      {"D83 <= D102", D::D83, D::D102, b52, d83_end},
  };
  return detail::check_dominance(
      "dominance-d", relations,
      [](D id, double lam) { return branch_curve_d(id, lam); }, 1e-9);
}

// Curve identities: C8 = C4 everywhere; the coinciding D-curve pairs agree on
// their overlaps.
inline CheckResult check_curve_identities(const VerifyOptions&) {
  using D = BranchD;
  constexpr double sqrt2 = std::numbers::sqrt2;
  struct Identity {
    const char* name;
    BranchId left;
    BranchId right;
    double lo;
    double hi;
  };
  const double b51 = (3.0 + 4.0 * sqrt2) / 23.0;
  const double b52 = (6.0 - 2.0 * sqrt2) / 7.0;
  const double b41 = (1.0 + sqrt2) / 3.0;
  const double b71 = (5.0 - 3.0 * sqrt2) / 7.0;
  const std::vector<Identity> identities = {
      {"C8 = C4", BranchC::C8, BranchC::C4, 0.0, 1.0},
      {"D31 = D51", D::D31, D::D51, 0.0, b51},
      {"D32 = D42", D::D32, D::D42, b41, 1.0},
      {"D81 = D101", D::D81, D::D101, 0.0, psi_lambda_1},
      {"D91 = D71", D::D91, D::D71, 0.0, b71},
      {"D92 = D83", D::D92, D::D83, b52, 1.0},
  };
  double worst = 0.0;
  std::string where = "none";
  for (const auto& id : identities) {
    for (int i = 0; i < 200; ++i) {
      const double lam = id.lo + (id.hi - id.lo) * i / 199.0;
      const double gap =
          std::abs(branch_value(id.left, lam) - branch_value(id.right, lam));
      if (gap > worst) {
        worst = gap;
        where = std::string(id.name) + " at lambda = " + format_double(lam);
      }
    }
  }
  return detail::make_result("curve-identities", worst, 1e-12, where);
}

// The closed modulus-norm profiles match sector_norm of the modulus along
// both families.
inline CheckResult check_family_profiles(const VerifyOptions&) {
  double worst = 0.0;
  std::string where = "none";
  for (int i = 0; i < 200; ++i) {
    const double t = -1.0 + 2.0 * i / 199.0;
    const double gap =
        std::abs(sector_norm(modulus(p_family(t))) - p_modulus_profile(t));
    if (gap > worst) {
      worst = gap;
      where = "P family, t = " + format_double(t);
    }
    const double s = 1.0 + (s_max - 1.0) * i / 199.0;
    const double gap_q =
        std::abs(sector_norm(modulus(q_family(s))) - q_modulus_profile(s));
    if (gap_q > worst) {
      worst = gap_q;
      where = "Q family, s = " + format_double(s);
    }
  }
  return detail::make_result("family-profiles", worst, 1e-12, where);
}

// All checks, in reporting order.
inline std::vector<CheckResult> run_verification(const VerifyOptions& opt) {
  return {
      check_norm_oracle(opt),
      check_extremal_unit_norm(opt),
      check_phi_sharpness(opt),
      check_phi_continuity(opt),
      check_markov_global(opt),
      check_psi_sharpness(opt),
      check_psi_max(opt),
      check_psi_continuity(opt),
      check_polarization_witness(opt),
      check_polarization_sampled(opt),
      check_unconditional_scan(opt),
      check_unconditional_sampled(opt),
      check_sign_patterns(opt),
      check_dominance_c(opt),
      check_dominance_d(opt),
      check_curve_identities(opt),
      check_family_profiles(opt),
  };
}

// The library-level acceptance criteria: the same checks grouped by the
// mathematical claim they witness.
struct Criterion {
  int number = 0;
  std::string description;
  std::vector<CheckResult> checks;
  bool pass = false;
};

inline std::vector<Criterion> run_criteria(const VerifyOptions& opt) {
  auto group = [](int number, std::string description,
                  std::vector<CheckResult> checks) {
    bool pass = true;
    for (const CheckResult& c : checks) pass = pass && c.pass;
    return Criterion{number, std::move(description), std::move(checks), pass};
  };
  return {
      group(1, "closed-form sector norm matches the brute-force oracle",
            {check_norm_oracle(opt)}),
      group(2, "extreme families lie on the unit sphere",
            {check_extremal_unit_norm(opt)}),
      group(3, "gradient bound is pointwise sharp and branchwise continuous",
            {check_phi_sharpness(opt), check_phi_continuity(opt)}),
      group(4, "global Markov constant equals 52 + 32 sqrt2",
            {check_markov_global(opt)}),
      group(5, "differential bound is sharp with maximum 4 + sqrt2 at pi/4",
            {check_psi_sharpness(opt), check_psi_max(opt),
             check_psi_continuity(opt)}),
      group(6, "polarization constant equals 2 + sqrt2/2 and bounds all polars",
            {check_polarization_witness(opt),
             check_polarization_sampled(opt)}),
      group(7, "unconditional constant equals 5 + 4 sqrt2 and bounds all signs",
            {check_unconditional_scan(opt), check_unconditional_sampled(opt),
             check_sign_patterns(opt)}),
      group(8, "branch-curve dominance relations and identities hold",
            {check_dominance_c(opt), check_dominance_d(opt),
             check_curve_identities(opt)}),
      group(9, "modulus-norm family profiles match their closed forms",
            {check_family_profiles(opt)}),
  };
}

}  // namespace octant
