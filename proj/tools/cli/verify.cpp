#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <stdexcept>

#include "rpiso/clifford.hpp"
#include "rpiso/profile.hpp"
#include "rpiso/specfn.hpp"
#include "rpiso/spectrum.hpp"
#include "rpiso/willmore.hpp"

namespace rpiso::cli {
namespace {

constexpr double kHalfPi = std::numbers::pi / 2;

std::string fmt(const char* format, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, format, a, b);
  return buf;
}

double rel_diff(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

std::map<std::string, double VerifyTolerances::*> tolerance_table() {
  return {{"profile_symmetry", &VerifyTolerances::profile_symmetry},
          {"envelope", &VerifyTolerances::envelope},
          {"stability_endpoint", &VerifyTolerances::stability_endpoint},
          {"identity", &VerifyTolerances::identity},
          {"transport", &VerifyTolerances::transport},
          {"cossin", &VerifyTolerances::cossin},
          {"sphere_area", &VerifyTolerances::sphere_area},
          {"willmore_min", &VerifyTolerances::willmore_min},
          {"willmore_constant", &VerifyTolerances::willmore_constant},
          {"finite_difference", &VerifyTolerances::finite_difference},
          {"rp3_perimeter", &VerifyTolerances::rp3_perimeter},
          {"stable_slack", &VerifyTolerances::stable_slack}};
}

void check_profiles(const VerifyOptions& opt, std::vector<CheckResult>& out) {
  for (int dim = 3; dim <= opt.max_dim; ++dim) {
    const int n = dim - 1;
    const auto curve = profile_curve(dim, opt.samples);
    out.push_back({"successive_rp" + std::to_string(dim), is_successive(curve, n),
                   std::to_string(opt.samples) + " volumes"});

    double worst_sym = 0.0;
    for (std::size_t i = 0; i < curve.size(); ++i) {
      worst_sym = std::max(worst_sym, rel_diff(curve[i].perimeter, curve[curve.size() - 1 - i].perimeter));
    }
    out.push_back({"profile_symmetry_rp" + std::to_string(dim), worst_sym <= opt.tol.profile_symmetry,
                   fmt("max relative gap %.3g", worst_sym)});

    bool stable = true;
    for (const ProfilePoint& p : curve) {
      if (p.best_k >= 1 && p.best_k <= n - 1 &&
          !stability_interval(p.best_k, n - p.best_k).contains(p.best_r, opt.tol.stable_slack)) {
        stable = false;
      }
    }
    out.push_back({"optimal_tubes_stable_rp" + std::to_string(dim), stable, "best_r inside stability interval"});

    bool envelope_ok = true;
    double worst_env = 0.0;
    try {
      for (const Transition& t : transition_volumes(dim)) {
        const double a = perimeter_at_volume(TubeFamily(dim, t.k), t.volume);
        const double b = perimeter_at_volume(TubeFamily(dim, t.k_next), t.volume);
        worst_env = std::max(worst_env, rel_diff(a, b));
      }
      envelope_ok = worst_env <= opt.tol.envelope;
    } catch (const NoCrossingError&) {
      envelope_ok = false;
    }
    out.push_back({"envelope_consistency_rp" + std::to_string(dim), envelope_ok,
                   fmt("max relative gap %.3g", worst_env)});
  }

  // The RP^7 envelope: seven arcs, six transitions.
  const auto curve7 = profile_curve(7, opt.samples);
  int arcs = curve7.empty() ? 0 : 1;
  for (std::size_t i = 1; i < curve7.size(); ++i) {
    if (curve7[i].best_k != curve7[i - 1].best_k) ++arcs;
  }
  const auto crossings7 = transition_volumes(7);
  out.push_back({"rp7_envelope_arcs", arcs == 7 && crossings7.size() == 6,
                 fmt("%.0f arcs, %.0f transitions", arcs, static_cast<double>(crossings7.size()))});
}

void check_stability(const VerifyOptions& opt, std::vector<CheckResult>& out) {
  const int max_n = opt.max_dim - 1;
  const int radii = 1000;
  bool sign_ok = true;
  bool candidates_ok = true;
  double worst_endpoint = 0.0;
  for (int n1 = 1; n1 < max_n; ++n1) {
    for (int n2 = 1; n1 + n2 <= max_n; ++n2) {
      const RadiusInterval iv = stability_interval(n1, n2);
      for (int i = 0; i < radii; ++i) {
        const double r = 0.01 + (kHalfPi - 0.02) * i / (radii - 1);
        const CliffordShape shape(n1, n2, r);
        const bool stable = stability_margin(shape) >= -kStabilityTolerance;
        if (stable != iv.contains(r)) sign_ok = false;
        double brute = INFINITY;
        for (int k1 = 0; k1 <= 6; ++k1) {
          for (int k2 = 0; k1 + k2 <= 6; ++k2) {
            if ((k1 + k2) % 2 == 0 && k1 + k2 > 0) brute = std::min(brute, laplace_eigenvalue(shape, k1, k2));
          }
        }
        if (brute < first_even_eigenvalue(shape).value) candidates_ok = false;
      }
      for (double r : {iv.lo, iv.hi}) {
        worst_endpoint = std::max(worst_endpoint, std::abs(stability_margin(CliffordShape(n1, n2, r))));
      }
    }
  }
  out.push_back({"stability_sign_agreement", sign_ok, "n1 + n2 <= " + std::to_string(max_n)});
  out.push_back({"stability_endpoints", worst_endpoint <= opt.tol.stability_endpoint,
                 fmt("max |margin| %.3g", worst_endpoint)});
  out.push_back({"stability_candidates", candidates_ok, "even modes k1 + k2 <= 6"});
}

void check_identities(const VerifyOptions& opt, std::vector<CheckResult>& out) {
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<int> dim(0, 12);
  std::uniform_real_distribution<double> radius(0.02, kHalfPi - 0.02);
  double worst_trace = 0.0;
  double worst_quadratic = 0.0;
  double worst_transport = 0.0;
  for (int i = 0; i < 1000; ++i) {
    int n1 = dim(rng);
    int n2 = dim(rng);
    if (n1 + n2 == 0) n2 = 1;
    const CliffordShape shape(n1, n2, radius(rng));
    const CurvatureData k = curvature(shape);
    const int n = shape.dim();
    worst_trace = std::max(worst_trace, std::abs(k.norm_sq - n + k.beta * n * k.mean) / (1 + k.norm_sq));
    for (double lambda : {k.kappa1, k.kappa2}) {
      worst_quadratic =
          std::max(worst_quadratic, std::abs(lambda * lambda + k.beta * lambda - 1) / (1 + lambda * lambda));
    }
    const double target = radius(rng);
    const double t = target - shape.r();
    worst_transport = std::max(worst_transport, rel_diff(parallel_jacobian(shape, t) * area_sphere(shape),
                                                         area_sphere(shape.with_radius(target))));
  }
  out.push_back({"beta_trace_identity", worst_trace <= opt.tol.identity, fmt("max residual %.3g", worst_trace)});
  out.push_back({"beta_quadratic_identity", worst_quadratic <= opt.tol.identity,
                 fmt("max residual %.3g", worst_quadratic)});
  out.push_back({"jacobian_area_transport", worst_transport <= opt.tol.transport,
                 fmt("max relative gap %.3g", worst_transport)});
}

void check_special_functions(const VerifyOptions& opt, std::vector<CheckResult>& out) {
  double worst = 0.0;
  for (int n1 = 0; n1 <= 10; ++n1) {
    for (int n2 = 0; n2 <= 10; ++n2) {
      for (double r : {0.1, 0.5, 1.0, 1.5}) {
        worst = std::max(worst, rel_diff(cossin_integral(n1, n2, r), cossin_integral_closed(n1, n2, r)));
      }
    }
  }
  out.push_back({"cossin_quadrature_vs_beta", worst <= opt.tol.cossin, fmt("max relative gap %.3g", worst)});

  const double pi = std::numbers::pi;
  double worst_area = std::max({rel_diff(sphere_area(1), 2 * pi), rel_diff(sphere_area(2), 4 * pi),
                                rel_diff(sphere_area(3), 2 * pi * pi)});
  for (int d = 2; d <= 60; ++d) {
    worst_area = std::max(worst_area, rel_diff(sphere_area(d), 2 * pi * sphere_area(d - 2) / (d - 1)));
  }
  out.push_back({"sphere_area", worst_area <= opt.tol.sphere_area, fmt("max relative gap %.3g", worst_area)});
}

void check_willmore(const VerifyOptions& opt, std::vector<CheckResult>& out) {
  const int r_samples = 10000;
  bool min_ok = true;
  bool constant_ok = true;
  double worst_min = 0.0;
  double worst_constant = 0.0;
  for (int n = 2; n <= opt.max_dim - 1; ++n) {
    const EnergyMinimum m = energy_minimum(n, r_samples);
    const double width = width_candidate(n);
    const double gap = rel_diff(m.value, width);
    worst_min = std::max(worst_min, gap);
    const bool balanced = m.k == n / 2 || m.k == n - n / 2;
    const bool at_minimal =
        balanced && std::abs(m.r - minimal_radius(m.k, n - m.k)) <= kHalfPi / r_samples;
    if (gap > opt.tol.willmore_min || !at_minimal) min_ok = false;
    for (int j = 1; j < 200; ++j) {
      const double e = tube_willmore_energy(CliffordShape(0, n, j * kHalfPi / 200));
      worst_constant = std::max(worst_constant, rel_diff(e, 2 * sphere_area(n)));
    }
  }
  constant_ok = worst_constant <= opt.tol.willmore_constant;
  out.push_back({"willmore_tube_minimum", min_ok, fmt("max relative gap %.3g", worst_min)});
  out.push_back({"willmore_geodesic_constant", constant_ok, fmt("max relative gap %.3g", worst_constant)});

  bool chain_ok = true;
  for (int n = 2; n <= 50; ++n) chain_ok = chain_ok && verify_area_chain(n);
  out.push_back({"area_chain", chain_ok, "n = 2..50"});

  // Step 1e-4 in double precision: the rounding floor eps*|ln f terms|/h^2
  // passes 1e-5 relative for n around 17, so the check stops at n = 10.
  double worst_fd = 0.0;
  for (int n = 2; n <= 10; ++n) {
    for (double x : {0.5, 1.3}) {
      const double h = 1e-4;
      const double fd =
          (log_clifford_area_f(n, x + h) - 2 * log_clifford_area_f(n, x) + log_clifford_area_f(n, x - h)) / (h * h);
      worst_fd = std::max(worst_fd, rel_diff(fd, logf_second_derivative(n, x)));
    }
  }
  out.push_back({"logf_finite_difference", worst_fd <= opt.tol.finite_difference,
                 fmt("max relative gap %.3g", worst_fd)});
}

void check_rp3(const VerifyOptions& opt, std::vector<CheckResult>& out) {
  const double pi = std::numbers::pi;
  const double half = pi * pi / 2;
  const ProfilePoint p = profile_at(3, half);
  const double sphere = perimeter_at_volume(TubeFamily(3, 0), half);
  const bool ok = p.best_k == 1 && std::abs(p.perimeter - pi * pi) <= opt.tol.rp3_perimeter &&
                  p.perimeter < sphere && profile_at(3, 0.01 * total_volume(3)).best_k == 0;
  out.push_back({"rp3_clifford_torus", ok, fmt("perimeter %.12g vs sphere %.12g", p.perimeter, sphere)});
}

}  // namespace

void VerifyTolerances::apply(const std::map<std::string, double>& overrides) {
  const auto table = tolerance_table();
  for (const auto& [name, value] : overrides) {
    const auto it = table.find(name);
    if (it == table.end()) throw std::invalid_argument("unknown tolerance '" + name + "'");
    if (!(value > 0.0)) throw std::invalid_argument("tolerance '" + name + "' must be positive");
    this->*(it->second) = value;
  }
}

std::vector<std::string> VerifyTolerances::names() {
  std::vector<std::string> out;
  for (const auto& [name, member] : tolerance_table()) out.push_back(name);
  return out;
}

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  if (options.max_dim < 3) throw std::invalid_argument("verify: --max-dim must be >= 3");
  if (options.samples < 100) throw std::invalid_argument("verify: --samples must be >= 100");
  std::vector<CheckResult> out;
  check_profiles(options, out);
  check_stability(options, out);
  check_identities(options, out);
  check_special_functions(options, out);
  check_willmore(options, out);
  check_rp3(options, out);
  return out;
}

}  // namespace rpiso::cli
