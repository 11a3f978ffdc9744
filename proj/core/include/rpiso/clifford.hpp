#ifndef RPISO_CLIFFORD_HPP_
#define RPISO_CLIFFORD_HPP_

#include <stdexcept>
#include <vector>

namespace rpiso {

// The Clifford hypersurface S^n1(cos r) x S^n2(sin r) in the unit sphere
// S^{n+1}, n = n1 + n2.  Either factor may be a 0-sphere (two points),
// in which case the hypersurface is a pair of antipodal geodesic spheres.
//
// Orientation: the unit normal at (cos r z, sin r w) is (-sin r z, cos r w),
// so the normal geodesic at time t lands on the same family at radius r + t.
class CliffordShape {
 public:
  // Throws std::invalid_argument unless n1, n2 >= 0, n1 + n2 >= 1 and
  // 0 < r < pi/2.
  CliffordShape(int n1, int n2, double r);

  int n1() const { return n1_; }
  int n2() const { return n2_; }
  int dim() const { return n1_ + n2_; }
  double r() const { return r_; }

  CliffordShape with_radius(double r) const { return {n1_, n2_, r}; }
  // The same hypersurface seen from the other side: factors swapped and
  // r replaced by pi/2 - r.
  CliffordShape complement() const;

  bool umbilic() const { return n1_ == 0 || n2_ == 0; }

 private:
  int n1_;
  int n2_;
  double r_;
};

// Shape operator data.  beta follows the convention A^2 + beta A - Id = 0.
struct CurvatureData {
  double kappa1;  // -tan r
  int mult1;
  double kappa2;  // cot r
  int mult2;
  double mean;     // H = trace(A) / n
  double norm_sq;  // |A|^2
  double beta;     // tan r - cot r
};

CurvatureData curvature(const CliffordShape& shape);

// All n principal curvatures, first factor first.
std::vector<double> principal_curvatures(const CliffordShape& shape);

// Radius at which the Clifford hypersurface is minimal: tan r = sqrt(n2/n1).
// Requires n1, n2 >= 1.
double minimal_radius(int n1, int n2);

// Area in S^{n+1}: |S^n1| |S^n2| cos^n1 r sin^n2 r.
double area_sphere(const CliffordShape& shape);

// Area of the antipodal quotient in RP^{n+1}; exactly area_sphere / 2.
double area_rp(const CliffordShape& shape);

// Area distortion of x -> cos t x + sin t N(x):
//   (cos(r+t)/cos r)^n1 (sin(r+t)/sin r)^n2.
// Any t is accepted; past a focal radius the value can vanish or change sign.
double parallel_jacobian(const CliffordShape& shape, double t);

struct QuadraticRoots {
  double lower;  // < 0
  double upper;  // > 0
};

// Both roots of t^2 - beta t - 1 = 0.  For t^2 + beta t - 1, whose roots
// are the principal curvatures, call quadratic_roots(-beta).
QuadraticRoots quadratic_roots(double beta);

}  // namespace rpiso

#endif  // RPISO_CLIFFORD_HPP_
