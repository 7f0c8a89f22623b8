// Extreme-point families of the unit ball and the Krein-Milman scanner.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "octant/extremals.hpp"
#include "octant/oracle.hpp"
#include "octant/poly.hpp"

namespace {
constexpr double sqrt2 = std::numbers::sqrt2;
}

TEST_CASE("p_family coefficient triples") {
  const octant::Poly p1 = octant::p_family(1.0);
  CHECK(p1.a == 1.0);
  CHECK(p1.b == 5.0 + 4.0 * sqrt2);
  CHECK(p1.c == -4.0 - 4.0 * sqrt2);

  const octant::Poly pm1 = octant::p_family(-1.0);
  CHECK(pm1.a == -1.0);
  CHECK(pm1.b == 3.0);
  CHECK(pm1.c == 0.0);

  const octant::Poly p0 = octant::p_family(0.0);
  CHECK(p0.a == 0.0);
  CHECK(p0.b == 8.0);
  CHECK(p0.c == -6.0);

  CHECK_THROWS_AS(octant::p_family(1.0000001), std::domain_error);
  CHECK_THROWS_AS(octant::p_family(-1.0000001), std::domain_error);
  CHECK_THROWS_AS(octant::p_family(std::nan("")), std::domain_error);
}

TEST_CASE("q_family coefficient triples") {
  const octant::Poly q1 = octant::q_family(1.0);
  CHECK(q1.a == 1.0);
  CHECK(q1.b == 1.0);
  CHECK(q1.c == -4.0);

  const octant::Poly q3 = octant::q_family(3.0);
  CHECK(q3.a == 1.0);
  CHECK(q3.b == 3.0);
  CHECK(q3.c == -2.0 * std::sqrt(8.0));

  CHECK_THROWS_AS(octant::q_family(0.99), std::domain_error);
  CHECK_THROWS_AS(octant::q_family(octant::s_max + 1e-6), std::domain_error);
}

TEST_CASE("the families join at P_1 = Q_{5+4 sqrt2}") {
  const octant::Poly p = octant::p_family(1.0);
  const octant::Poly q = octant::q_family(octant::s_max);
  CHECK(std::abs(p.a - q.a) <= 1e-12);
  CHECK(std::abs(p.b - q.b) <= 1e-12);
  CHECK(std::abs(p.c - q.c) <= 1e-12);
}

TEST_CASE("corner is the isolated extreme point") {
  const octant::Poly k = octant::corner();
  CHECK(k.a == 1.0);
  CHECK(k.b == 1.0);
  CHECK(k.c == 0.0);
  CHECK(octant::sector_norm(k) == 1.0);
  const octant::Poly mk = octant::modulus(k);
  CHECK((mk.a == 1.0 && mk.b == 1.0 && mk.c == 0.0));
}

TEST_CASE("both families lie on the unit sphere") {
  const int n = 1000;
  for (int i = 0; i < n; ++i) {
    const double t = -1.0 + 2.0 * i / (n - 1);
    CHECK(std::abs(octant::sector_norm(octant::p_family(t)) - 1.0) <= 1e-12);
    const double s = 1.0 + (octant::s_max - 1.0) * i / (n - 1);
    CHECK(std::abs(octant::sector_norm(octant::q_family(s)) - 1.0) <= 1e-12);
  }
}

TEST_CASE("to_poly applies family and sign") {
  const octant::Poly neg = octant::to_poly({octant::Family::P, 0.0, -1});
  CHECK(neg.a == 0.0);
  CHECK(neg.b == -8.0);
  CHECK(neg.c == 6.0);

  const octant::Poly cor = octant::to_poly({octant::Family::Corner, 0.0, +1});
  CHECK((cor.a == 1.0 && cor.b == 1.0 && cor.c == 0.0));

  const octant::Poly q = octant::to_poly({octant::Family::Q, 3.0, +1});
  CHECK(q.b == 3.0);

  CHECK(std::string(octant::family_name(octant::Family::P)) == "P");
  CHECK(std::string(octant::family_name(octant::Family::Q)) == "Q");
  CHECK(std::string(octant::family_name(octant::Family::Corner)) == "corner");
}

TEST_CASE("scan_extremes maximizes the modulus norm at the family junction") {
  const auto scan = octant::scan_extremes(
      [](const octant::Poly& p) {
        return octant::sector_norm(octant::modulus(p));
      },
      1000);
  CHECK(std::abs(scan.value - (5.0 + 4.0 * sqrt2)) <= 1e-9);
  CHECK(scan.argmax.family == octant::Family::P);
  CHECK(std::abs(scan.argmax.param - 1.0) <= 1e-6);
}

TEST_CASE("scan_extremes maximizes the squared gradient at (1, 0)") {
  const auto scan = octant::scan_extremes(
      [](const octant::Poly& p) {
        return octant::squared_length(octant::gradient(p, 1.0, 0.0));
      },
      1000);
  CHECK(std::abs(scan.value - (52.0 + 32.0 * sqrt2)) <=
        1e-9 * (52.0 + 32.0 * sqrt2));
  CHECK(scan.argmax.family == octant::Family::P);
  CHECK(std::abs(scan.argmax.param - 1.0) <= 1e-6);
}

TEST_CASE("scan_extremes of the norm itself is 1") {
  const auto scan = octant::scan_extremes(
      [](const octant::Poly& p) { return octant::sector_norm(p); }, 256);
  CHECK(std::abs(scan.value - 1.0) <= 1e-12);
}

TEST_CASE("scan_extremes dominates convex functionals on the unit ball") {
  auto modulus_norm = [](const octant::Poly& p) {
    return octant::sector_norm(octant::modulus(p));
  };
  const octant::SectorPoint pt(1.0, 0.3);
  auto gradsq = [&pt](const octant::Poly& p) {
    return octant::squared_length(octant::gradient(p, pt));
  };

  const double max_mod = octant::scan_extremes(modulus_norm, 2048).value;
  const double max_grad = octant::scan_extremes(gradsq, 2048).value;

  for (const octant::Poly& p : octant::random_polys(100, 19)) {
    const double norm = octant::sector_norm(p);
    if (norm == 0.0) continue;
    const octant::Poly u{p.a / norm, p.b / norm, p.c / norm};
    CHECK(modulus_norm(u) <= max_mod + 1e-6);
    CHECK(gradsq(u) <= max_grad + 1e-6);
  }
}

TEST_CASE("scan_extremes is sign-symmetric for even functionals") {
  auto f = [](const octant::Poly& p) {
    return octant::sector_norm(octant::modulus(p));
  };
  auto f_neg = [&f](const octant::Poly& p) {
    return f({-p.a, -p.b, -p.c});
  };
  const auto a = octant::scan_extremes(f, 512);
  const auto b = octant::scan_extremes(f_neg, 512);
  CHECK(a.value == b.value);
}

TEST_CASE("scan_extremes rejects bad input") {
  auto f = [](const octant::Poly& p) { return p.a; };
  CHECK_THROWS_AS(octant::scan_extremes(f, 1), std::invalid_argument);
  auto bad = [](const octant::Poly&) {
    return std::numeric_limits<double>::quiet_NaN();
  };
  CHECK_THROWS_AS(octant::scan_extremes(bad, 64), std::domain_error);
}
