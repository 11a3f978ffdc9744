#ifndef RPISO_WILLMORE_HPP_
#define RPISO_WILLMORE_HPP_

#include "rpiso/clifford.hpp"

namespace rpiso {

//======================================================================
// Willmore-type energy Int (1 + H^2)^{n/2} of antipodal-invariant
// hypersurfaces in S^{n+1}, restricted to the Clifford family, and the
// area comparison between minimal Clifford hypersurfaces
//   C_{p,n-p} = S^p(sqrt(p/n)) x S^{n-p}(sqrt((n-p)/n)).
//
// Everything here lives in the full sphere S^{n+1}, not in the quotient.
//======================================================================

// area_sphere(shape) * (1 + H^2)^{n/2}.  H is constant on the shape.
double tube_willmore_energy(const CliffordShape& shape);

// f(x) = |S^x| |S^{n-x}| (x/n)^{x/2} ((n-x)/n)^{(n-x)/2} for real x in
// (0, n), with |S^d| continued through Gamma.  At integer p this is the
// area of C_{p,n-p}.  Computed as exp(log_clifford_area_f).
double clifford_area_f(int n, double x);
double log_clifford_area_f(int n, double x);

// d^2/dx^2 ln f(x):
//   -1/4 psi'((x+1)/2) - 1/4 psi'((n-x+1)/2) + 1/(2x) + 1/(2(n-x)).
double logf_second_derivative(int n, double x);

// sigma_n, the area of the balanced minimal Clifford C_{floor(n/2), ceil(n/2)}.
double sigma_n(int n);

// The right-hand side of the width identity for RP^{n+1} as literally
// stated: the full area of C_{floor(n/2), ceil(n/2)} in S^{n+1}.  Whether
// a factor 1/2 for the quotient was intended is not settled; see the
// willmore report's width note.
double width_candidate(int n);

// 2|S^n| > f(p) >= f(floor(n/2)) for every integer 1 <= p <= n-1,
// compared in the log domain, together with ln f'' > 0 on a 1000-point
// grid in (0.01 n, 0.99 n).
bool verify_area_chain(int n);
bool area_chain_holds(int n);
bool log_convexity_holds(int n, int grid = 1000);

struct EnergyMinimum {
  double value;
  int k;
  double r;
};

// Brute-force minimum of tube_willmore_energy over k = 0..n and the
// radii r_j = j * (pi/2) / r_samples, 0 < j < r_samples.  Ties resolve
// to the lexicographically smallest (k, r).
EnergyMinimum energy_minimum(int n, int r_samples);

// The same scan restricted to a single core dimension k.
EnergyMinimum energy_minimum_for_k(int n, int k, int r_samples);

struct WillmoreReport {
  int n;
  double sigma_n;
  double width;
  bool chain_ok;
  bool convexity_ok;
  double min_energy;
  int argmin_k;
  double argmin_r;
};

WillmoreReport willmore_report(int n, int r_samples);

// The three quantities of the parallel-surface estimate at time t:
//   prod_i (cos t - lambda_i sin t) <= (cos t - H sin t)^n <= (1 + H^2)^{n/2}.
// The first inequality needs every factor positive (AM-GM).  With lambda
// from curvature(), the product equals parallel_jacobian(shape, -t).
struct ParallelEstimate {
  double jacobian;
  double mean_bound;
  double energy_density;
  bool factors_positive;
};

ParallelEstimate parallel_estimate(const CliffordShape& shape, double t);

}  // namespace rpiso

#endif  // RPISO_WILLMORE_HPP_
