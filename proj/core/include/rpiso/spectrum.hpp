#ifndef RPISO_SPECTRUM_HPP_
#define RPISO_SPECTRUM_HPP_

#include "rpiso/clifford.hpp"

namespace rpiso {

// A Laplace eigenvalue on S^n1(cos r) x S^n2(sin r), indexed by the
// harmonic degrees on the two factors.  Eigenfunctions are products of
// harmonic polynomials and survive the antipodal quotient only when
// k1 + k2 is even.
struct EigenMode {
  int k1;
  int k2;
  double value;

  bool antipodal_even() const { return (k1 + k2) % 2 == 0; }
};

// k1(k1 + n1 - 1)/cos^2 r + k2(k2 + n2 - 1)/sin^2 r.  A 0-sphere factor
// only carries degrees 0 and 1.
double laplace_eigenvalue(const CliffordShape& shape, int k1, int k2);

// The potential of the Jacobi operator L = Delta + n + |A|^2, written as
// n1/cos^2 r + n2/sin^2 r (the same number, arranged so that it matches
// the (1,1) eigenvalue bit for bit).
double jacobi_potential(const CliffordShape& shape);

// Smallest positive antipodal-even eigenvalue.  Only (1,1), (2,0) and
// (0,2) can attain it; ties go to the first of these in that order.
// Requires n1, n2 >= 1.
EigenMode first_even_eigenvalue(const CliffordShape& shape);

// lambda - n - |A|^2 for the mode above.  Never positive: the (1,1)
// mode always sits exactly at the threshold.
double stability_margin(const CliffordShape& shape);

// Margin for a pair of antipodal geodesic spheres (a 0-sphere factor).
// Vanishes identically; evaluated literally as n/sin^2 r - n - n cot^2 r.
double geodesic_sphere_margin(int n, double r);

struct RadiusInterval {
  double lo;
  double hi;

  bool contains(double r, double slack = 0.0) const { return r >= lo - slack && r <= hi + slack; }
};

// Radii with sqrt(n2/(n1+2)) <= tan r <= sqrt((n2+2)/n1).
RadiusInterval stability_interval(int n1, int n2);

inline constexpr double kStabilityTolerance = 1e-12;

struct StabilityReport {
  CliffordShape shape;
  double lambda1;
  double margin;
  bool stable;
  // Bounds on tan r.  For a 0-sphere factor these are 0 and +infinity.
  double interval_lo;
  double interval_hi;
};

// Full verdict for one shape; degenerate factors go through
// geodesic_sphere_margin.
StabilityReport analyze_stability(const CliffordShape& shape);

}  // namespace rpiso

#endif  // RPISO_SPECTRUM_HPP_
