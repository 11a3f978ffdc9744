#include "rpiso/spectrum.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

namespace rpiso {
namespace {

void require_full_factors(const CliffordShape& shape, const char* who) {
  if (shape.n1() < 1 || shape.n2() < 1) {
    throw std::invalid_argument(std::string(who) + ": both factors need dimension >= 1");
  }
}

}  // namespace

double laplace_eigenvalue(const CliffordShape& shape, int k1, int k2) {
  if (k1 < 0 || k2 < 0) throw std::invalid_argument("laplace_eigenvalue: negative degree");
  if ((shape.n1() == 0 && k1 > 1) || (shape.n2() == 0 && k2 > 1)) {
    throw std::invalid_argument("laplace_eigenvalue: a 0-sphere only carries degrees 0 and 1");
  }
  const double c = std::cos(shape.r());
  const double s = std::sin(shape.r());
  const double first = static_cast<double>(k1 * (k1 + shape.n1() - 1)) / (c * c);
  const double second = static_cast<double>(k2 * (k2 + shape.n2() - 1)) / (s * s);
  return first + second;
}

double jacobi_potential(const CliffordShape& shape) {
  const double c = std::cos(shape.r());
  const double s = std::sin(shape.r());
  return static_cast<double>(shape.n1()) / (c * c) + static_cast<double>(shape.n2()) / (s * s);
}

EigenMode first_even_eigenvalue(const CliffordShape& shape) {
  require_full_factors(shape, "first_even_eigenvalue");
  EigenMode best{1, 1, laplace_eigenvalue(shape, 1, 1)};
  for (const auto& [k1, k2] : {std::pair{2, 0}, std::pair{0, 2}}) {
    const double value = laplace_eigenvalue(shape, k1, k2);
    if (value < best.value) best = {k1, k2, value};
  }
  return best;
}

double stability_margin(const CliffordShape& shape) {
  return first_even_eigenvalue(shape).value - jacobi_potential(shape);
}

double geodesic_sphere_margin(int n, double r) {
  if (n < 1) throw std::invalid_argument("geodesic_sphere_margin: n must be >= 1");
  if (!(r > 0.0 && r < std::numbers::pi / 2)) {
    throw std::invalid_argument("geodesic_sphere_margin: r must lie in (0, pi/2)");
  }
  const double s = std::sin(r);
  const double cot = std::cos(r) / s;
  return n / (s * s) - n - n * cot * cot;
}

RadiusInterval stability_interval(int n1, int n2) {
  if (n1 < 1 || n2 < 1) {
    throw std::invalid_argument("stability_interval: both factors need dimension >= 1");
  }
  return {std::atan(std::sqrt(static_cast<double>(n2) / (n1 + 2))),
          std::atan(std::sqrt(static_cast<double>(n2 + 2) / n1))};
}

StabilityReport analyze_stability(const CliffordShape& shape) {
  if (shape.umbilic()) {
    const double margin = geodesic_sphere_margin(shape.dim(), shape.r());
    // Degree-1 harmonic on the 0-sphere times degree 1 on the other factor.
    const double lambda = laplace_eigenvalue(shape, 1, 1);
    return {shape, lambda, margin, margin >= -kStabilityTolerance, 0.0,
            std::numeric_limits<double>::infinity()};
  }
  const EigenMode mode = first_even_eigenvalue(shape);
  const double margin = mode.value - jacobi_potential(shape);
  return {shape,
          mode.value,
          margin,
          margin >= -kStabilityTolerance,
          std::sqrt(static_cast<double>(shape.n2()) / (shape.n1() + 2)),
          std::sqrt(static_cast<double>(shape.n2() + 2) / shape.n1())};
}

}  // namespace rpiso
