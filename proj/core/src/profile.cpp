#include "rpiso/profile.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "parallel.hpp"
#include "rpiso/clifford.hpp"
#include "rpiso/specfn.hpp"

namespace rpiso {
namespace {

constexpr int kCrossingScan = 2048;

double space_factor(Space space) { return space == Space::SphereAntipodal ? 1.0 : 0.5; }

void require_interior_volume(double v, double total, const char* who) {
  if (!(v > 0.0 && v < total)) {
    throw std::invalid_argument(std::string(who) + ": volume must lie strictly between 0 and " +
                                std::to_string(total));
  }
}

// Bisection on a function that is negative at lo and nonnegative at hi,
// down to adjacent doubles.
template <class F>
double bisect(const F& f, double lo, double hi) {
  for (int i = 0; i < 2000; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (f(mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

std::string to_string(Space space) {
  return space == Space::SphereAntipodal ? "sphere" : "rp";
}

TubeFamily::TubeFamily(int ambient_dim, int k, Space space)
    : ambient_dim_(ambient_dim), k_(k), space_(space) {
  if (ambient_dim < 2) throw std::invalid_argument("TubeFamily: ambient dimension must be >= 2");
  if (k < 0 || k > ambient_dim - 1) {
    throw std::invalid_argument("TubeFamily: core dimension k must lie in [0, ambient_dim - 1]");
  }
}

double total_volume(int ambient_dim, Space space) {
  if (ambient_dim < 1) throw std::invalid_argument("total_volume: ambient dimension must be >= 1");
  return space_factor(space) * sphere_area(ambient_dim);
}

double tube_volume(const TubeFamily& fam, double r) {
  const int n = fam.hypersurface_dim();
  const int k = fam.k();
  return space_factor(fam.space()) * sphere_area(k) * sphere_area(n - k) *
         cossin_integral_closed(k, n - k, r);
}

double tube_perimeter(const TubeFamily& fam, double r) {
  const CliffordShape boundary(fam.k(), fam.hypersurface_dim() - fam.k(), r);
  return fam.space() == Space::SphereAntipodal ? area_sphere(boundary) : area_rp(boundary);
}

double radius_for_volume(const TubeFamily& fam, double v) {
  require_interior_volume(v, total_volume(fam.ambient_dim(), fam.space()), "radius_for_volume");
  return bisect([&](double r) { return tube_volume(fam, r) - v; }, 0.0, std::numbers::pi / 2);
}

double perimeter_at_volume(const TubeFamily& fam, double v) {
  return tube_perimeter(fam, radius_for_volume(fam, v));
}

ProfilePoint profile_at(int ambient_dim, double v, Space space) {
  require_interior_volume(v, total_volume(ambient_dim, space), "profile_at");
  ProfilePoint best{v, 0.0, -1, 0.0};
  for (int k = 0; k < ambient_dim; ++k) {
    const TubeFamily fam(ambient_dim, k, space);
    const double r = radius_for_volume(fam, v);
    const double perimeter = tube_perimeter(fam, r);
    if (best.best_k < 0 || perimeter < best.perimeter) best = {v, perimeter, k, r};
  }
  return best;
}

std::vector<double> volume_grid(int ambient_dim, int samples, Space space) {
  if (samples < 2) throw std::invalid_argument("volume_grid: need at least 2 samples");
  const double total = total_volume(ambient_dim, space);
  std::vector<double> grid(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    grid[i] = total * static_cast<double>(i + 1) / static_cast<double>(samples + 1);
  }
  return grid;
}

std::vector<ProfilePoint> profile_curve(int ambient_dim, int samples, Space space) {
  const std::vector<double> grid = volume_grid(ambient_dim, samples, space);
  std::vector<ProfilePoint> curve(grid.size());
  detail::parallel_for(grid.size(),
                       [&](std::size_t i) { curve[i] = profile_at(ambient_dim, grid[i], space); });
  return curve;
}

std::vector<Transition> transition_volumes(int ambient_dim, Space space) {
  if (ambient_dim < 3) throw std::invalid_argument("transition_volumes: ambient dimension must be >= 3");
  const double total = total_volume(ambient_dim, space);
  std::vector<Transition> out;
  for (int k = 0; k + 1 < ambient_dim; ++k) {
    const TubeFamily lower(ambient_dim, k, space);
    const TubeFamily upper(ambient_dim, k + 1, space);
    const auto gap = [&](double v) {
      return perimeter_at_volume(lower, v) - perimeter_at_volume(upper, v);
    };
    // First change from "k strictly better" to "k+1 at least as good".
    double prev_v = total / (kCrossingScan + 1);
    double prev_gap = gap(prev_v);
    bool found = false;
    for (int j = 2; j <= kCrossingScan && !found; ++j) {
      const double v = total * j / (kCrossingScan + 1);
      const double g = gap(v);
      if (prev_gap < 0.0 && g >= 0.0) {
        out.push_back({k, k + 1, bisect(gap, prev_v, v)});
        found = true;
      }
      prev_v = v;
      prev_gap = g;
    }
    if (!found) {
      throw NoCrossingError("transition_volumes: tubes about RP^" + std::to_string(k) +
                            " and RP^" + std::to_string(k + 1) + " never exchange order");
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Transition& a, const Transition& b) { return a.volume < b.volume; });
  return out;
}

bool is_successive(std::span<const ProfilePoint> curve, int hypersurface_dim) {
  if (curve.empty()) return false;
  std::vector<bool> seen(static_cast<std::size_t>(hypersurface_dim + 1), false);
  int prev = curve.front().best_k;
  for (const ProfilePoint& p : curve) {
    if (p.best_k < prev || p.best_k < 0 || p.best_k > hypersurface_dim) return false;
    seen[p.best_k] = true;
    prev = p.best_k;
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

bool successive_check(int ambient_dim, int samples, Space space) {
  if (samples < 100) throw std::invalid_argument("successive_check: need at least 100 samples");
  const auto curve = profile_curve(ambient_dim, samples, space);
  return is_successive(curve, ambient_dim - 1);
}

}  // namespace rpiso
