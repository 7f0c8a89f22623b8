// Unconditional constant: modulus-norm ratio, closed family profiles, and
// sign-pattern domination.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "octant/extremals.hpp"
#include "octant/oracle.hpp"
#include "octant/unconditional.hpp"

namespace {
constexpr double sqrt2 = std::numbers::sqrt2;
}

TEST_CASE("modulus_norm_ratio closed values") {
  CHECK(std::abs(octant::modulus_norm_ratio({-1, 3, 0}) - 2.0) <= 1e-12);
  CHECK(std::abs(octant::modulus_norm_ratio(octant::p_family(1.0)) -
                 octant::unconditional_value) <= 1e-12);
  // A polynomial with nonnegative coefficients is its own modulus.
  CHECK(octant::modulus_norm_ratio({2, 1, 3}) == 1.0);
  CHECK_THROWS_AS(octant::modulus_norm_ratio({0, 0, 0}), std::domain_error);
}

TEST_CASE("family modulus profiles: endpoints and rejection") {
  CHECK(octant::p_modulus_profile(-1.0) == 2.0);
  CHECK(std::abs(octant::p_modulus_profile(1.0) -
                 octant::unconditional_value) <= 1e-12);
  CHECK(octant::q_modulus_profile(1.0) == 3.0);
  CHECK(std::abs(octant::q_modulus_profile(octant::s_max) -
                 octant::unconditional_value) <= 1e-12);

  CHECK_THROWS_AS(octant::p_modulus_profile(1.1), std::domain_error);
  CHECK_THROWS_AS(octant::q_modulus_profile(0.5), std::domain_error);
}

TEST_CASE("profiles match the modulus norm along both families") {
  for (int i = 0; i <= 200; ++i) {
    const double t = -1.0 + 2.0 * i / 200.0;
    CHECK(std::abs(octant::sector_norm(octant::modulus(octant::p_family(t))) -
                   octant::p_modulus_profile(t)) <= 1e-12);
    const double s = 1.0 + (octant::s_max - 1.0) * i / 200.0;
    CHECK(std::abs(octant::sector_norm(octant::modulus(octant::q_family(s))) -
                   octant::q_modulus_profile(s)) <= 1e-12);
  }
}

TEST_CASE("profiles are nondecreasing toward the family junction") {
  double prev = -1.0;
  for (int i = 0; i <= 500; ++i) {
    const double t = -1.0 + 2.0 * i / 500.0;
    const double v = octant::p_modulus_profile(t);
    CHECK(v >= prev - 1e-12);
    prev = v;
  }
  prev = -1.0;
  for (int i = 0; i <= 500; ++i) {
    const double s = 1.0 + (octant::s_max - 1.0) * i / 500.0;
    const double v = octant::q_modulus_profile(s);
    CHECK(v >= prev - 1e-12);
    prev = v;
  }
}

TEST_CASE("the unconditional constant from the family scan") {
  const octant::UnconditionalConstant u = octant::unconditional_constant(2048);
  CHECK(std::abs(u.value - octant::unconditional_value) <= 1e-9);
  CHECK(std::abs(u.witness.b - (5.0 + 4.0 * sqrt2)) <= 1e-12);
  CHECK_THROWS_AS(octant::unconditional_constant(1), std::invalid_argument);
}

TEST_CASE("random polynomials respect the unconditional bound") {
  for (const octant::Poly& p : octant::random_polys(200, 37)) {
    if (p.a == 0.0 && p.b == 0.0 && p.c == 0.0) continue;
    CHECK(octant::modulus_norm_ratio(p) <=
          octant::unconditional_value * (1.0 + 1e-9));
  }
}

TEST_CASE("every sign pattern is dominated by the modulus norm") {
  for (const octant::Poly& p : octant::random_polys(50, 41)) {
    if (p.a == 0.0 && p.b == 0.0 && p.c == 0.0) continue;
    const double m = octant::sector_norm(octant::modulus(p));
    for (const double sa : {1.0, -1.0}) {
      for (const double sb : {1.0, -1.0}) {
        for (const double sc : {1.0, -1.0}) {
          const double v =
              octant::sector_norm({sa * p.a, sb * p.b, sc * p.c});
          CHECK(v <= m * (1.0 + 1e-12));
        }
      }
    }
  }
}
