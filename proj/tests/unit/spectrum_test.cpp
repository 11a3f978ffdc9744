#include "rpiso/spectrum.hpp"

#include <doctest.h>

#include <cmath>

#include "../oracles.hpp"

using namespace rpiso;
using oracle::close_rel;
using oracle::kHalfPi;
using oracle::kPi;

TEST_CASE("laplace_eigenvalue examples") {
  CHECK(laplace_eigenvalue(CliffordShape(3, 4, 0.9), 0, 0) == 0.0);
  CHECK(close_rel(laplace_eigenvalue(CliffordShape(1, 1, kPi / 4), 1, 1), 4.0, 1e-14));
  CHECK(close_rel(laplace_eigenvalue(CliffordShape(1, 1, kPi / 3), 2, 0), 16.0, 1e-14));
  CHECK(laplace_eigenvalue(CliffordShape(0, 3, 0.5), 1, 0) == 0.0);
  CHECK_THROWS_AS(laplace_eigenvalue(CliffordShape(0, 3, 0.5), 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(laplace_eigenvalue(CliffordShape(2, 0, 0.5), 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(laplace_eigenvalue(CliffordShape(2, 2, 0.5), -1, 0), std::invalid_argument);
}

TEST_CASE("first_even_eigenvalue examples") {
  const EigenMode torus = first_even_eigenvalue(CliffordShape(1, 1, kPi / 4));
  CHECK(torus.k1 == 1);
  CHECK(torus.k2 == 1);
  CHECK(close_rel(torus.value, 4.0, 1e-14));

  const EigenMode third = first_even_eigenvalue(CliffordShape(1, 1, kPi / 3));
  CHECK(close_rel(third.value, 16.0 / 3.0, 1e-14));
  CHECK(close_rel(laplace_eigenvalue(CliffordShape(1, 1, kPi / 3), 0, 2), 16.0 / 3.0, 1e-14));

  const CliffordShape square(2, 2, kPi / 4);
  CHECK(close_rel(first_even_eigenvalue(square).value,
                  oracle::brute_force_even_eigenvalue(2, 2, kPi / 4, 4), 1e-14));
  CHECK(first_even_eigenvalue(square).antipodal_even());

  CHECK_THROWS_AS(first_even_eigenvalue(CliffordShape(0, 2, 0.4)), std::invalid_argument);
}

TEST_CASE("stability_margin examples") {
  CHECK(std::abs(stability_margin(CliffordShape(1, 1, kPi / 4))) < 1e-13);
  CHECK(std::abs(stability_margin(CliffordShape(1, 1, kPi / 3))) < 1e-13);
  CHECK(stability_margin(CliffordShape(1, 1, kPi / 2.5)) < -1e-3);
  CHECK_THROWS_AS(stability_margin(CliffordShape(3, 0, 0.4)), std::invalid_argument);
}

TEST_CASE("jacobi_potential equals n + |A|^2") {
  for (const auto [n1, n2] : {std::pair{1, 1}, std::pair{3, 5}, std::pair{7, 2}}) {
    for (double r : {0.05, 0.6, 1.2, 1.5}) {
      const CliffordShape s(n1, n2, r);
      const double t = std::tan(r);
      CHECK(close_rel(jacobi_potential(s), n1 + n2 + n1 * t * t + n2 / (t * t), 1e-13));
    }
  }
}

TEST_CASE("stability_interval examples") {
  const RadiusInterval one = stability_interval(1, 1);
  CHECK(close_rel(one.lo, kPi / 6, 1e-15));
  CHECK(close_rel(one.hi, kPi / 3, 1e-15));
  const RadiusInterval two = stability_interval(2, 2);
  CHECK(close_rel(two.lo, std::atan(1 / std::sqrt(2.0)), 1e-15));
  CHECK(close_rel(two.hi, std::atan(std::sqrt(2.0)), 1e-15));
  for (int n1 = 1; n1 <= 8; ++n1) {
    for (int n2 = 1; n2 <= 8; ++n2) {
      CHECK(close_rel(stability_interval(n1, n2).lo, kHalfPi - stability_interval(n2, n1).hi, 1e-14));
    }
  }
  CHECK_THROWS_AS(stability_interval(0, 2), std::invalid_argument);
}

TEST_CASE("minimal radius lies strictly inside the stability interval") {
  for (int n = 2; n <= 20; ++n) {
    for (int n1 = 1; n1 < n; ++n1) {
      const RadiusInterval iv = stability_interval(n1, n - n1);
      const double r0 = minimal_radius(n1, n - n1);
      CHECK(iv.lo < r0);
      CHECK(r0 < iv.hi);
    }
  }
}

TEST_CASE("margin vanishes inside the interval and is negative outside") {
  // The (1,1) eigenvalue equals n + |A|^2 identically, so the margin is
  // exactly zero wherever (2,0) and (0,2) do not undercut it.
  for (int n1 = 1; n1 <= 4; ++n1) {
    for (int n2 = 1; n2 <= 4; ++n2) {
      const RadiusInterval iv = stability_interval(n1, n2);
      for (int i = 1; i < 400; ++i) {
        const double r = i * kHalfPi / 400;
        const double m = stability_margin(CliffordShape(n1, n2, r));
        if (r > iv.lo + 1e-9 && r < iv.hi - 1e-9) {
          CHECK(m == 0.0);
        } else if (r < iv.lo - 1e-9 || r > iv.hi + 1e-9) {
          CHECK(m < 0.0);
        }
      }
    }
  }
}

TEST_CASE("geodesic_sphere_margin vanishes") {
  CHECK(std::abs(geodesic_sphere_margin(2, 0.3)) < 1e-12 * 2 / std::pow(std::sin(0.3), 2));
  CHECK(std::abs(geodesic_sphere_margin(5, 1.2)) < 1e-12 * 5 / std::pow(std::sin(1.2), 2));
  for (int n = 1; n <= 12; ++n) {
    for (double r = 0.01; r < kHalfPi; r += 0.05) {
      CHECK(std::abs(geodesic_sphere_margin(n, r)) <= 1e-12 * n / (std::sin(r) * std::sin(r)));
    }
  }
  CHECK_THROWS_AS(geodesic_sphere_margin(0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(geodesic_sphere_margin(2, 0.0), std::invalid_argument);
}

TEST_CASE("analyze_stability report") {
  const StabilityReport inside = analyze_stability(CliffordShape(2, 3, minimal_radius(2, 3)));
  CHECK(inside.stable);
  CHECK(close_rel(inside.interval_lo, std::sqrt(3.0 / 4.0), 1e-15));
  CHECK(close_rel(inside.interval_hi, std::sqrt(5.0 / 2.0), 1e-15));
  const double tan_r = std::tan(inside.shape.r());
  CHECK(inside.interval_lo <= tan_r);
  CHECK(tan_r <= inside.interval_hi);

  const StabilityReport outside = analyze_stability(CliffordShape(2, 3, 0.2));
  CHECK_FALSE(outside.stable);
  CHECK(outside.margin < 0.0);

  const StabilityReport sphere = analyze_stability(CliffordShape(0, 4, 0.8));
  CHECK(sphere.stable);
  CHECK(sphere.interval_lo == 0.0);
  CHECK(std::isinf(sphere.interval_hi));
}
