#ifndef RPISO_SPECFN_HPP_
#define RPISO_SPECFN_HPP_

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace rpiso {

//======================================================================
// Special functions and quadrature used throughout the library.  All
// routines are pure and work in IEEE double precision.
//======================================================================

// Settings for adaptive_integrate.  A subinterval is accepted when its
// Gauss/Kronrod error estimate is below
//   max(abs_tol * width / total_width, rel_tol * |estimate|).
struct Quadrature {
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  int max_depth = 40;

  // Throws std::invalid_argument unless abs_tol > 0, rel_tol > 0 and
  // max_depth >= 1.
  void validate() const;
};

// Raised when adaptive_integrate cannot meet its tolerance before the
// recursion bound is hit.
class QuadratureError : public std::runtime_error {
 public:
  explicit QuadratureError(const std::string& what) : std::runtime_error(what) {}
};

// ln Gamma(x) for x > 0 (Lanczos, g = 7, nine terms).
double log_gamma(double x);

// Sum_{l >= 0} (x + l)^{-2}, the derivative of the digamma function.
double trigamma(double x);

// ln B(a, b).
double log_beta(double a, double b);

// Measure of the unit d-sphere, 2 pi^{(d+1)/2} / Gamma((d+1)/2).  The
// 0-sphere is two points and gets measure 2.
double sphere_area(int d);

// Natural log of the same expression, valid for any real d > -1.  Used
// where the sphere measure itself would underflow.
double log_sphere_area(double d);

// Regularized incomplete beta I_x(a, b).
double reg_inc_beta(double x, double a, double b);

// Same, with 1 - x supplied by the caller.  When x comes from sin^2 r
// the complement cos^2 r is known to full relative precision, and the
// symmetric branch I = 1 - I_{1-x}(b, a) uses it directly.
double reg_inc_beta(double x, double one_minus_x, double a, double b);

namespace detail {

// 7-point Gauss / 15-point Kronrod nodes on [-1, 1].
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct RuleResult {
  double estimate;
  double error;
};

template <class F>
RuleResult kronrod15(const F& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * kKronrodWeights[7];
  double gauss = fc * kGaussWeights[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kKronrodNodes[j];
    const double pair = f(center - dx) + f(center + dx);
    kronrod += kKronrodWeights[j] * pair;
    if (j % 2 == 1) gauss += kGaussWeights[j / 2] * pair;
  }
  return {kronrod * half, std::abs((kronrod - gauss) * half)};
}

template <class F>
double integrate_recursive(const F& f, double a, double b, const RuleResult& whole,
                           double total_width, const Quadrature& q, int depth) {
  const double local_abs = q.abs_tol * (b - a) / total_width;
  if (whole.error <= std::max(local_abs, q.rel_tol * std::abs(whole.estimate))) {
    return whole.estimate;
  }
  if (depth >= q.max_depth) {
    throw QuadratureError("adaptive_integrate: no convergence on [" + std::to_string(a) +
                          ", " + std::to_string(b) + "] at depth " + std::to_string(depth));
  }
  const double mid = 0.5 * (a + b);
  const RuleResult left = kronrod15(f, a, mid);
  const RuleResult right = kronrod15(f, mid, b);
  return integrate_recursive(f, a, mid, left, total_width, q, depth + 1) +
         integrate_recursive(f, mid, b, right, total_width, q, depth + 1);
}

}  // namespace detail

// Adaptive bisection with a Gauss-Kronrod 7/15 rule on each piece.
// Returns the integral of f over [a, b]; an empty interval gives 0.
template <class F>
double adaptive_integrate(const F& f, double a, double b, const Quadrature& q = {}) {
  q.validate();
  if (a == b) return 0.0;
  if (b < a) return -adaptive_integrate(f, b, a, q);
  const auto whole = detail::kronrod15(f, a, b);
  return detail::integrate_recursive(f, a, b, whole, b - a, q, 0);
}

// Integral of cos^n1(t) sin^n2(t) over [0, r] by adaptive quadrature.
double cossin_integral(int n1, int n2, double r, const Quadrature& q = {});

// The same integral through the incomplete beta function:
//   1/2 B((n2+1)/2, (n1+1)/2) I_{sin^2 r}((n2+1)/2, (n1+1)/2).
double cossin_integral_closed(int n1, int n2, double r);

}  // namespace rpiso

#endif  // RPISO_SPECFN_HPP_
