#include "rpiso/clifford.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rpiso/specfn.hpp"

namespace rpiso {

CliffordShape::CliffordShape(int n1, int n2, double r) : n1_(n1), n2_(n2), r_(r) {
  if (n1 < 0 || n2 < 0 || n1 + n2 < 1) {
    throw std::invalid_argument("CliffordShape: need n1, n2 >= 0 and n1 + n2 >= 1");
  }
  if (!(r > 0.0 && r < std::numbers::pi / 2)) {
    throw std::invalid_argument("CliffordShape: r must lie in (0, pi/2)");
  }
}

CliffordShape CliffordShape::complement() const {
  return {n2_, n1_, std::numbers::pi / 2 - r_};
}

CurvatureData curvature(const CliffordShape& shape) {
  const double t = std::tan(shape.r());
  const double c = 1.0 / t;
  const int n = shape.dim();
  CurvatureData out{};
  out.kappa1 = -t;
  out.mult1 = shape.n1();
  out.kappa2 = c;
  out.mult2 = shape.n2();
  out.mean = (out.mult1 * out.kappa1 + out.mult2 * out.kappa2) / n;
  out.norm_sq = out.mult1 * out.kappa1 * out.kappa1 + out.mult2 * out.kappa2 * out.kappa2;
  out.beta = t - c;
  return out;
}

std::vector<double> principal_curvatures(const CliffordShape& shape) {
  const CurvatureData k = curvature(shape);
  std::vector<double> out(static_cast<std::size_t>(shape.dim()));
  for (int i = 0; i < shape.dim(); ++i) out[i] = i < k.mult1 ? k.kappa1 : k.kappa2;
  return out;
}

double minimal_radius(int n1, int n2) {
  if (n1 < 1 || n2 < 1) throw std::invalid_argument("minimal_radius: both factors need dimension >= 1");
  return std::atan(std::sqrt(static_cast<double>(n2) / n1));
}

double area_sphere(const CliffordShape& shape) {
  return sphere_area(shape.n1()) * sphere_area(shape.n2()) *
         std::pow(std::cos(shape.r()), shape.n1()) * std::pow(std::sin(shape.r()), shape.n2());
}

double area_rp(const CliffordShape& shape) { return 0.5 * area_sphere(shape); }

double parallel_jacobian(const CliffordShape& shape, double t) {
  const double r = shape.r();
  const double image = r + t;
  // Focal collapse onto one of the factor spheres.
  if ((image == std::numbers::pi / 2 && shape.n1() > 0) || (image == 0.0 && shape.n2() > 0)) {
    return 0.0;
  }
  return std::pow(std::cos(r + t) / std::cos(r), shape.n1()) *
         std::pow(std::sin(r + t) / std::sin(r), shape.n2());
}

QuadraticRoots quadratic_roots(double beta) {
  const double disc = std::sqrt(beta * beta + 4.0);
  // Product of roots is -1; take the cancellation-free root first.
  if (beta >= 0.0) {
    const double upper = 0.5 * (beta + disc);
    return {-1.0 / upper, upper};
  }
  const double lower = 0.5 * (beta - disc);
  return {lower, -1.0 / lower};
}

}  // namespace rpiso
