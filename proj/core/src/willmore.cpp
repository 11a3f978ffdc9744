#include "rpiso/willmore.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "parallel.hpp"
#include "rpiso/specfn.hpp"

namespace rpiso {
namespace {

void require_open_unit(int n, double x, const char* who) {
  if (n < 1) throw std::invalid_argument(std::string(who) + ": n must be >= 1");
  if (!(x > 0.0 && x < n)) {
    throw std::invalid_argument(std::string(who) + ": x must lie strictly inside (0, n)");
  }
}

void require_dim(int n, const char* who) {
  if (n < 2) throw std::invalid_argument(std::string(who) + ": n must be >= 2");
}

}  // namespace

double tube_willmore_energy(const CliffordShape& shape) {
  const double h = curvature(shape).mean;
  return area_sphere(shape) * std::pow(1.0 + h * h, 0.5 * shape.dim());
}

double log_clifford_area_f(int n, double x) {
  require_open_unit(n, x, "clifford_area_f");
  const double y = n - x;
  return log_sphere_area(x) + log_sphere_area(y) + 0.5 * x * std::log(x / n) +
         0.5 * y * std::log(y / n);
}

double clifford_area_f(int n, double x) { return std::exp(log_clifford_area_f(n, x)); }

double logf_second_derivative(int n, double x) {
  require_open_unit(n, x, "logf_second_derivative");
  const double y = n - x;
  return -0.25 * trigamma(0.5 * (x + 1.0)) - 0.25 * trigamma(0.5 * (y + 1.0)) + 0.5 / x +
         0.5 / y;
}

double sigma_n(int n) {
  require_dim(n, "sigma_n");
  return clifford_area_f(n, n / 2);
}

double width_candidate(int n) {
  require_dim(n, "width_candidate");
  return clifford_area_f(n, n / 2);
}

bool area_chain_holds(int n) {
  require_dim(n, "area_chain_holds");
  // f(floor(n/2)) and f(ceil(n/2)) agree exactly in theory; allow one
  // part in 1e12 of rounding in the log domain.
  constexpr double kLogSlack = 1e-12;
  const double log_two_spheres = std::numbers::ln2 + log_sphere_area(n);
  const double log_balanced = log_clifford_area_f(n, n / 2);
  for (int p = 1; p < n; ++p) {
    const double log_f = log_clifford_area_f(n, p);
    if (!(log_two_spheres > log_f)) return false;
    if (!(log_f >= log_balanced - kLogSlack)) return false;
  }
  return true;
}

bool log_convexity_holds(int n, int grid) {
  require_dim(n, "log_convexity_holds");
  if (grid < 2) throw std::invalid_argument("log_convexity_holds: grid needs >= 2 points");
  const double lo = 0.01 * n;
  const double step = 0.98 * n / (grid - 1);
  for (int i = 0; i < grid; ++i) {
    if (!(logf_second_derivative(n, lo + i * step) > 0.0)) return false;
  }
  return true;
}

bool verify_area_chain(int n) { return area_chain_holds(n) && log_convexity_holds(n); }

EnergyMinimum energy_minimum_for_k(int n, int k, int r_samples) {
  require_dim(n, "energy_minimum");
  if (k < 0 || k > n) throw std::invalid_argument("energy_minimum: k must lie in [0, n]");
  if (r_samples < 2) throw std::invalid_argument("energy_minimum: need at least 2 radius samples");
  EnergyMinimum best{std::numeric_limits<double>::infinity(), k, 0.0};
  for (int j = 1; j < r_samples; ++j) {
    const double r = j * (std::numbers::pi / 2) / r_samples;
    const double e = tube_willmore_energy(CliffordShape(k, n - k, r));
    if (e < best.value) best = {e, k, r};
  }
  return best;
}

EnergyMinimum energy_minimum(int n, int r_samples) {
  require_dim(n, "energy_minimum");
  std::vector<EnergyMinimum> per_k(static_cast<std::size_t>(n + 1));
  detail::parallel_for(per_k.size(), [&](std::size_t k) {
    per_k[k] = energy_minimum_for_k(n, static_cast<int>(k), r_samples);
  });
  EnergyMinimum best = per_k.front();
  for (const EnergyMinimum& m : per_k) {
    if (m.value < best.value) best = m;
  }
  return best;
}

WillmoreReport willmore_report(int n, int r_samples) {
  const EnergyMinimum m = energy_minimum(n, r_samples);
  return {n,       sigma_n(n), width_candidate(n), area_chain_holds(n), log_convexity_holds(n),
          m.value, m.k,        m.r};
}

ParallelEstimate parallel_estimate(const CliffordShape& shape, double t) {
  const double c = std::cos(t);
  const double s = std::sin(t);
  ParallelEstimate out{1.0, 0.0, 0.0, true};
  for (double lambda : principal_curvatures(shape)) {
    const double factor = c - lambda * s;
    if (!(factor > 0.0)) out.factors_positive = false;
    out.jacobian *= factor;
  }
  const double h = curvature(shape).mean;
  out.mean_bound = std::pow(c - h * s, shape.dim());
  out.energy_density = std::pow(1.0 + h * h, 0.5 * shape.dim());
  return out;
}

}  // namespace rpiso
