#pragma once

// Brute-force global maximizers, deliberately formula-free.  Every closed form
// in this library is cross-checked against these scans; the scans themselves
// know nothing about the closed forms.
//
// The method is a dense uniform grid followed by golden-section refinement of
// the bracket around the best grid sample.  All objectives in this project are
// low-degree trigonometric polynomials (or pointwise maxima of few of them),
// so one grid cell contains at most one local maximum at the default
// resolutions and the refinement converges to full double precision.  The
// result is deterministic: it depends only on the objective and the config.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "octant/poly.hpp"

namespace octant {

struct ScanConfig {
  int grid = 4096;          // uniform samples per axis, endpoints included
  int refine_iters = 60;    // golden-section contractions after the grid pass
  std::uint64_t seed = 42;  // seed for randomized test corpora only
};

struct Max1DResult {
  double x = 0.0;
  double value = 0.0;
};

struct Max2DResult {
  double x = 0.0;
  double y = 0.0;
  double value = 0.0;
};

namespace detail {

// (sqrt(5) - 1) / 2, the golden-section interior ratio.
inline constexpr double inv_phi = 0.6180339887498949;

inline void require_finite(double v, const char* what, double x) {
  if (!std::isfinite(v)) {
    throw std::domain_error(std::string(what) + ": non-finite value at x = " +
                            format_double(x));
  }
}

inline void require_finite(double v, const char* what, double x, double y) {
  if (!std::isfinite(v)) {
    throw std::domain_error(std::string(what) + ": non-finite value at (" +
                            format_double(x) + ", " + format_double(y) + ")");
  }
}

inline double grid_point(double lo, double hi, int n, int i) {
  return lo + (hi - lo) * (static_cast<double>(i) / static_cast<double>(n - 1));
}

inline void validate_config(const ScanConfig& cfg, const char* what) {
  if (cfg.grid < 2) {
    throw std::invalid_argument(std::string(what) + ": grid must be >= 2");
  }
  if (cfg.refine_iters < 0) {
    throw std::invalid_argument(std::string(what) +
                                ": refine_iters must be >= 0");
  }
}

}  // namespace detail

// Global maximum of f over [lo, hi]: inclusive uniform grid of cfg.grid
// samples (first argmax wins ties), then cfg.refine_iters golden-section
// contractions of the bracket spanning the two cells around the argmax.  The
// returned value never falls below the best grid sample.  Non-finite values
// of f are reported with their location.
template <class F>
Max1DResult max_1d(F&& f, double lo, double hi, const ScanConfig& cfg = {}) {
  detail::validate_config(cfg, "max_1d");
  if (!(lo <= hi)) throw std::invalid_argument("max_1d: require lo <= hi");

  const int n = cfg.grid;
  Max1DResult best{lo, -std::numeric_limits<double>::infinity()};
  int best_i = 0;
  for (int i = 0; i < n; ++i) {
    const double x = detail::grid_point(lo, hi, n, i);
    const double v = f(x);
    detail::require_finite(v, "max_1d", x);
    if (v > best.value) {
      best = {x, v};
      best_i = i;
    }
  }

  double a = detail::grid_point(lo, hi, n, std::max(best_i - 1, 0));
  double b = detail::grid_point(lo, hi, n, std::min(best_i + 1, n - 1));
  auto probe = [&](double x) {
    const double v = f(x);
    detail::require_finite(v, "max_1d", x);
    if (v > best.value) best = {x, v};
    return v;
  };
  double x1 = b - detail::inv_phi * (b - a);
  double x2 = a + detail::inv_phi * (b - a);
  double f1 = probe(x1);
  double f2 = probe(x2);
  for (int it = 0; it < cfg.refine_iters; ++it) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + detail::inv_phi * (b - a);
      f2 = probe(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - detail::inv_phi * (b - a);
      f1 = probe(x1);
    }
  }
  return best;
}

namespace detail {

// Shared refinement stage of the 2D maximizers: alternating single
// golden-section contractions per coordinate, evaluating the objective at the
// two interior points of the active coordinate's bracket while the other
// coordinate is held at the best point found so far.  Interior points never
// leave the initial brackets, so the walk stays inside the 3x3-cell
// neighborhood of the grid argmax.
template <class F>
void golden_refine_2d(F&& f, double ax, double bx, double ay, double by,
                      Max2DResult& best, int iters) {
  for (int it = 0; it < iters; ++it) {
    if (it % 2 == 0) {
      const double y = best.y;
      const double x1 = bx - inv_phi * (bx - ax);
      const double x2 = ax + inv_phi * (bx - ax);
      const double v1 = f(x1, y);
      require_finite(v1, "max_2d", x1, y);
      const double v2 = f(x2, y);
      require_finite(v2, "max_2d", x2, y);
      if (v1 > best.value) best = {x1, y, v1};
      if (v2 > best.value) best = {x2, y, v2};
      if (v1 < v2) {
        ax = x1;
      } else {
        bx = x2;
      }
    } else {
      const double x = best.x;
      const double y1 = by - inv_phi * (by - ay);
      const double y2 = ay + inv_phi * (by - ay);
      const double v1 = f(x, y1);
      require_finite(v1, "max_2d", x, y1);
      const double v2 = f(x, y2);
      require_finite(v2, "max_2d", x, y2);
      if (v1 > best.value) best = {x, y1, v1};
      if (v2 > best.value) best = {x, y2, v2};
      if (v1 < v2) {
        ay = y1;
      } else {
        by = y2;
      }
    }
  }
}

}  // namespace detail

// Global maximum of f over the box [lo1, hi1] x [lo2, hi2]: inclusive
// cfg.grid x cfg.grid sample grid (row-major first argmax wins ties), then
// cfg.refine_iters alternating coordinate-wise golden-section contractions
// around the best cell.  Deterministic; never below the best grid sample.
template <class F>
Max2DResult max_2d(F&& f, double lo1, double hi1, double lo2, double hi2,
                   const ScanConfig& cfg = {}) {
  detail::validate_config(cfg, "max_2d");
  if (!(lo1 <= hi1 && lo2 <= hi2)) {
    throw std::invalid_argument("max_2d: require lo <= hi on both axes");
  }

  const int n = cfg.grid;
  Max2DResult best{lo1, lo2, -std::numeric_limits<double>::infinity()};
  int best_i = 0;
  int best_j = 0;
  for (int i = 0; i < n; ++i) {
    const double x = detail::grid_point(lo1, hi1, n, i);
    for (int j = 0; j < n; ++j) {
      const double y = detail::grid_point(lo2, hi2, n, j);
      const double v = f(x, y);
      detail::require_finite(v, "max_2d", x, y);
      if (v > best.value) {
        best = {x, y, v};
        best_i = i;
        best_j = j;
      }
    }
  }

  const double ax = detail::grid_point(lo1, hi1, n, std::max(best_i - 1, 0));
  const double bx =
      detail::grid_point(lo1, hi1, n, std::min(best_i + 1, n - 1));
  const double ay = detail::grid_point(lo2, hi2, n, std::max(best_j - 1, 0));
  const double by =
      detail::grid_point(lo2, hi2, n, std::min(best_j + 1, n - 1));
  detail::golden_refine_2d(f, ax, bx, ay, by, best, cfg.refine_iters);
  return best;
}

// Numeric sup-norm of P over the sector: brute-force maximum of
// |P(cos t, sin t)| over t in [0, pi/4].  The verification counterpart of
// sector_norm.
inline double numeric_poly_norm(const Poly& p, const ScanConfig& cfg = {}) {
  return max_1d(
             [&p](double t) {
               return std::abs(eval(p, std::cos(t), std::sin(t)));
             },
             0.0, sector_angle, cfg)
      .value;
}

// Reproducible random coefficient triples, uniform in [-10, 10]^3.  Drawn
// from std::mt19937_64 with an explicit bit-to-double mapping so the corpus
// is identical on every standard-conforming platform.
inline std::vector<Poly> random_polys(int count, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  auto next = [&gen]() {
    const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;  // [0, 1)
    return -10.0 + 20.0 * u;
  };
  std::vector<Poly> out;
  out.reserve(static_cast<std::size_t>(std::max(count, 0)));
  for (int i = 0; i < count; ++i) {
    const double a = next();
    const double b = next();
    const double c = next();
    out.push_back({a, b, c});
  }
  return out;
}

}  // namespace octant
