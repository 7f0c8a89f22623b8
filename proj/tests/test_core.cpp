// Core types: evaluation, sector sup-norm, trigonometric sup, gradient,
// modulus, polar form, sector points, and deterministic formatting.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "octant/oracle.hpp"
#include "octant/poly.hpp"

namespace {

constexpr double sqrt2 = std::numbers::sqrt2;

octant::Poly sharp_witness() {
  return {1.0, 5.0 + 4.0 * sqrt2, -4.0 - 4.0 * sqrt2};
}

}  // namespace

TEST_CASE("eval matches the coefficient form") {
  CHECK(octant::eval({1, 1, 0}, 1.0, 1.0) == 2.0);
  CHECK(octant::eval({0, 0, 1}, 1.0, 1.0) == 1.0);
  CHECK(octant::eval(sharp_witness(), 1.0, 0.0) == 1.0);
  CHECK(octant::eval({1, 2, 3}, octant::SectorPoint(2.0, 1.0)) == 12.0);
}

TEST_CASE("SectorPoint validates cone membership") {
  CHECK_NOTHROW(octant::SectorPoint(1.0, 0.0));
  CHECK_NOTHROW(octant::SectorPoint(1.0, 1.0));
  CHECK_NOTHROW(octant::SectorPoint(0.0, 0.0));
  CHECK(octant::SectorPoint(2.0, 0.5).lambda() == 0.25);

  CHECK_THROWS_AS(octant::SectorPoint(1.0, 1.0 + 1e-9), std::domain_error);
  CHECK_THROWS_AS(octant::SectorPoint(1.0, -0.1), std::domain_error);
  CHECK_THROWS_AS(octant::SectorPoint(-1.0, -2.0), std::domain_error);
  CHECK_THROWS_AS(
      octant::SectorPoint(std::numeric_limits<double>::quiet_NaN(), 0.0),
      std::domain_error);
  CHECK_THROWS_AS(
      octant::SectorPoint(std::numeric_limits<double>::infinity(), 1.0),
      std::domain_error);
  CHECK_THROWS_AS(octant::SectorPoint(0.0, 0.0).lambda(), std::domain_error);
}

TEST_CASE("from_angle parametrizes the unit arc") {
  const octant::SectorPoint p0 = octant::from_angle(0.0);
  CHECK(p0.x() == 1.0);
  CHECK(p0.y() == 0.0);

  const octant::SectorPoint p4 = octant::from_angle(octant::sector_angle);
  CHECK(std::abs(p4.x() - sqrt2 / 2.0) <= 1e-15);
  CHECK(p4.y() <= p4.x());
  CHECK(std::abs(p4.lambda() - 1.0) <= 1e-15);

  const octant::SectorPoint p8 = octant::from_angle(std::numbers::pi / 8.0);
  CHECK(std::abs(p8.x() - std::cos(std::numbers::pi / 8.0)) <= 1e-15);
  CHECK(std::abs(p8.y() - std::sin(std::numbers::pi / 8.0)) <= 1e-15);

  CHECK_THROWS_AS(octant::from_angle(-0.1), std::domain_error);
  CHECK_THROWS_AS(octant::from_angle(octant::sector_angle + 0.1),
                  std::domain_error);
  CHECK_THROWS_AS(octant::from_angle(std::nan("")), std::domain_error);
}

TEST_CASE("sup_linear lemma values") {
  CHECK(octant::sup_linear(1.0, 0.0) == 1.0);
  CHECK(std::abs(octant::sup_linear(0.0, 1.0) - sqrt2 / 2.0) <= 1e-15);
  CHECK(std::abs(octant::sup_linear(1.0, 1.0) - sqrt2) <= 1e-15);
  CHECK(octant::sup_linear(1.0, -1.0) == 1.0);
  CHECK(octant::sup_linear(0.0, 0.0) == 0.0);
}

TEST_CASE("sup_linear is continuous across its case boundaries") {
  // b/a = 0+ and 0-.
  CHECK(std::abs(octant::sup_linear(1.0, 1e-13) -
                 octant::sup_linear(1.0, 0.0)) <= 1e-12);
  CHECK(std::abs(octant::sup_linear(1.0, -1e-13) -
                 octant::sup_linear(1.0, 0.0)) <= 1e-12);
  // b/a = 1 from both sides.
  CHECK(std::abs(octant::sup_linear(1.0, 1.0 - 1e-13) - sqrt2) <= 1e-12);
  CHECK(std::abs(octant::sup_linear(1.0, 1.0 + 1e-13) - sqrt2) <= 1e-12);
  // a = 0 from both sides.
  CHECK(std::abs(octant::sup_linear(1e-13, 1.0) -
                 octant::sup_linear(0.0, 1.0)) <= 1e-12);
  CHECK(std::abs(octant::sup_linear(-1e-13, 1.0) -
                 octant::sup_linear(0.0, 1.0)) <= 1e-12);
}

TEST_CASE("sup_linear is even and matches a dense arc scan") {
  for (const octant::Poly& p : octant::random_polys(50, 3)) {
    const double a = p.a;
    const double b = p.b;
    CHECK(octant::sup_linear(a, b) == octant::sup_linear(-a, -b));
    const double scan =
        octant::max_1d(
            [&](double t) {
              return std::abs(a * std::cos(t) + b * std::sin(t));
            },
            0.0, octant::sector_angle, {2048, 60, 0})
            .value;
    CHECK(std::abs(octant::sup_linear(a, b) - scan) <=
          1e-9 * std::max(1.0, scan));
  }
}

TEST_CASE("sector_norm closed-form values") {
  CHECK(octant::sector_norm({1, 1, 0}) == 1.0);
  CHECK(octant::sector_norm({0, 0, 1}) == 0.5);
  CHECK(octant::sector_norm({0, 0, 0}) == 0.0);
  CHECK(std::abs(octant::sector_norm(sharp_witness()) - 1.0) <= 1e-12);
  CHECK(octant::sector_norm({1, 3, 0}) == 2.0);
  CHECK(octant::sector_norm({-1, 3, 0}) == 1.0);
}

TEST_CASE("sector_norm branches agree on the seam c(a-b) = 0") {
  for (const octant::Poly& p : octant::random_polys(100, 5)) {
    // c = 0 with arbitrary a, b.
    const octant::Poly zc{p.a, p.b, 0.0};
    CHECK(octant::detail::sector_norm_aligned(zc) ==
          octant::detail::sector_norm_opposed(zc));
    // a = b with arbitrary c.
    const octant::Poly eq{p.a, p.a, p.c};
    CHECK(octant::detail::sector_norm_aligned(eq) ==
          octant::detail::sector_norm_opposed(eq));
  }
}

TEST_CASE("sector_norm satisfies the norm axioms on samples") {
  const auto polys = octant::random_polys(200, 7);
  for (std::size_t i = 0; i + 1 < polys.size(); i += 2) {
    const octant::Poly& p = polys[i];
    const octant::Poly& q = polys[i + 1];
    const double np = octant::sector_norm(p);
    const double nq = octant::sector_norm(q);
    for (const double alpha : {-2.5, 0.5}) {
      const octant::Poly ap{alpha * p.a, alpha * p.b, alpha * p.c};
      CHECK(std::abs(octant::sector_norm(ap) - std::abs(alpha) * np) <=
            1e-12 * std::max(1.0, np));
    }
    const octant::Poly sum{p.a + q.a, p.b + q.b, p.c + q.c};
    CHECK(octant::sector_norm(sum) <= np + nq + 1e-12);
    CHECK(np >= 0.0);
  }
}

TEST_CASE("gradient of the quadratic form") {
  const octant::Vec2 g = octant::gradient({1, 1, 0}, 1.0, 1.0);
  CHECK(g.x == 2.0);
  CHECK(g.y == 2.0);

  const octant::Vec2 gw = octant::gradient(sharp_witness(), 1.0, 0.0);
  CHECK(gw.x == 2.0);
  CHECK(gw.y == -4.0 - 4.0 * sqrt2);
  CHECK(std::abs(octant::squared_length(gw) - (52.0 + 32.0 * sqrt2)) <=
        1e-12);

  const octant::Vec2 gz = octant::gradient({0, 0, 0}, 3.0, 1.0);
  CHECK(gz.x == 0.0);
  CHECK(gz.y == 0.0);
}

TEST_CASE("gradient matches central finite differences") {
  const double h = 1e-6;
  const double pts[][2] = {{1.0, 0.5}, {2.0, 1.0}, {1.3, 0.2}, {0.7, 0.7}};
  for (const octant::Poly& p : octant::random_polys(50, 11)) {
    for (const auto& xy : pts) {
      const double x = xy[0];
      const double y = xy[1];
      const double fx =
          (octant::eval(p, x + h, y) - octant::eval(p, x - h, y)) / (2.0 * h);
      const double fy =
          (octant::eval(p, x, y + h) - octant::eval(p, x, y - h)) / (2.0 * h);
      const octant::Vec2 g = octant::gradient(p, x, y);
      CHECK(std::abs(fx - g.x) <= 1e-6);
      CHECK(std::abs(fy - g.y) <= 1e-6);
    }
  }
}

TEST_CASE("modulus takes coefficientwise absolute values") {
  const octant::Poly m = octant::modulus({1, -1, -1});
  CHECK(m.a == 1.0);
  CHECK(m.b == 1.0);
  CHECK(m.c == 1.0);

  const octant::Poly mw = octant::modulus(sharp_witness());
  CHECK(mw.a == 1.0);
  CHECK(mw.b == 5.0 + 4.0 * sqrt2);
  CHECK(mw.c == 4.0 + 4.0 * sqrt2);

  const octant::Poly mz = octant::modulus({0, 0, 0});
  CHECK(mz.a == 0.0);
  CHECK(mz.b == 0.0);
  CHECK(mz.c == 0.0);
}

TEST_CASE("polar form halves the cross coefficient") {
  const octant::SymBilinearForm id = octant::polar_of({1, 1, 0});
  CHECK(id.m11 == 1.0);
  CHECK(id.m22 == 1.0);
  CHECK(id.m12 == 0.0);

  const octant::SymBilinearForm xy = octant::polar_of({0, 0, 1});
  CHECK(xy.m12 == 0.5);

  const octant::SymBilinearForm w = octant::polar_of(sharp_witness());
  CHECK(w.m11 == 1.0);
  CHECK(w.m22 == 5.0 + 4.0 * sqrt2);
  CHECK(std::abs(w.m12 - (-2.0 - 2.0 * sqrt2)) <= 1e-14);
}

TEST_CASE("polar form restores the polynomial on the diagonal") {
  const double vs[][2] = {{1.0, 0.0}, {0.3, 0.1}, {2.0, -1.5}, {0.0, 1.0}};
  for (const octant::Poly& p : octant::random_polys(100, 13)) {
    const octant::SymBilinearForm L = octant::polar_of(p);
    for (const auto& vv : vs) {
      const octant::Vec2 v{vv[0], vv[1]};
      const double direct = octant::eval(p, v.x, v.y);
      const double viaL = octant::eval(L, v, v);
      CHECK(std::abs(direct - viaL) <= 1e-13 * std::max(1.0, std::abs(direct)));
    }
  }
}

TEST_CASE("bilinear form is symmetric") {
  // Symmetric up to rounding: the triple products associate differently when
  // the arguments swap.
  for (const octant::Poly& p : octant::random_polys(20, 17)) {
    const octant::SymBilinearForm L = octant::polar_of(p);
    const octant::Vec2 u{0.9, 0.2};
    const octant::Vec2 v{0.4, 0.4};
    const double forward = octant::eval(L, u, v);
    const double swapped = octant::eval(L, v, u);
    CHECK(std::abs(forward - swapped) <=
          1e-14 * std::max(1.0, std::abs(forward)));
  }
}

TEST_CASE("format_double is shortest round-trip") {
  CHECK(octant::format_double(1.0) == "1");
  CHECK(octant::format_double(0.5) == "0.5");
  CHECK(octant::format_double(0.0) == "0");
  CHECK(octant::format_double(-0.0) == "0");

  const double values[] = {1.0 / 3.0,          sqrt2,  5.0 + 4.0 * sqrt2,
                           97.25483399593904,  1e-9,   -2.5e300,
                           -0.3333333333333333};
  for (const double v : values) {
    const std::string s = octant::format_double(v);
    CHECK(std::strtod(s.c_str(), nullptr) == v);
  }

  CHECK(octant::format_gap(1e-6) == "1.000e-06");
  CHECK(octant::format_gap(0.0) == "0.000e+00");
}
