#ifndef RPISO_PROFILE_HPP_
#define RPISO_PROFILE_HPP_

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rpiso {

//======================================================================
// Isoperimetric profile of RP^{n+1} as the lower envelope of the
// perimeter/volume curves of tubes about projective subspaces RP^k.
//
// The tube of radius r about RP^k is bounded by the quotient of the
// Clifford hypersurface S^k(cos r) x S^{n-k}(sin r); its volume is
//   1/2 |S^k| |S^{n-k}| Int_0^r cos^k t sin^{n-k} t dt.
// Isoperimetric regions in RP^{n+1} are such tubes, so the envelope over
// k is the profile itself rather than an upper bound for it.
//======================================================================

// ProjectiveSpace measures regions in RP^{n+1}.  SphereAntipodal measures
// their antipodal-invariant lifts to S^{n+1}, doubling every perimeter
// and volume.
enum class Space { ProjectiveSpace, SphereAntipodal };

std::string to_string(Space space);

class TubeFamily {
 public:
  // Throws std::invalid_argument unless ambient_dim >= 2 and
  // 0 <= k <= ambient_dim - 1.
  TubeFamily(int ambient_dim, int k, Space space = Space::ProjectiveSpace);

  int ambient_dim() const { return ambient_dim_; }
  int hypersurface_dim() const { return ambient_dim_ - 1; }
  int k() const { return k_; }
  Space space() const { return space_; }

 private:
  int ambient_dim_;
  int k_;
  Space space_;
};

// Volume of RP^{ambient_dim} (or of S^{ambient_dim} in SphereAntipodal mode).
double total_volume(int ambient_dim, Space space = Space::ProjectiveSpace);

// r in [0, pi/2].  Strictly increasing from 0 to total_volume.
double tube_volume(const TubeFamily& fam, double r);

// r in (0, pi/2).
double tube_perimeter(const TubeFamily& fam, double r);

// Inverse of tube_volume by bisection, run until the bracket collapses
// to adjacent doubles.  Requires 0 < v < total_volume.
double radius_for_volume(const TubeFamily& fam, double v);

// Perimeter of the k-tube that encloses volume v.
double perimeter_at_volume(const TubeFamily& fam, double v);

struct ProfilePoint {
  double volume;
  double perimeter;
  int best_k;
  double best_r;
};

// Minimizes over k = 0..n; exact ties go to the smaller k.
ProfilePoint profile_at(int ambient_dim, double v, Space space = Space::ProjectiveSpace);

// Volumes v_i = (i + 1) / (samples + 1) * total for i < samples.  The
// grid is symmetric under v -> total - v.
std::vector<double> volume_grid(int ambient_dim, int samples, Space space = Space::ProjectiveSpace);

// profile_at over volume_grid, evaluated in parallel; ordered by volume.
std::vector<ProfilePoint> profile_curve(int ambient_dim, int samples,
                                        Space space = Space::ProjectiveSpace);

struct Transition {
  int k;
  int k_next;
  double volume;
};

class NoCrossingError : public std::runtime_error {
 public:
  explicit NoCrossingError(const std::string& what) : std::runtime_error(what) {}
};

// Crossing volume of the k and k+1 perimeter curves for each adjacent
// pair, increasing in v.  Requires ambient_dim >= 3.  Throws
// NoCrossingError if some adjacent pair never changes order.
std::vector<Transition> transition_volumes(int ambient_dim, Space space = Space::ProjectiveSpace);

// True when the optimal k along the sampled profile steps through
// 0, 1, ..., n in order, each on a nonempty run.  Requires samples >= 100.
bool successive_check(int ambient_dim, int samples, Space space = Space::ProjectiveSpace);

// Same test on an already computed curve.
bool is_successive(std::span<const ProfilePoint> curve, int hypersurface_dim);

}  // namespace rpiso

#endif  // RPISO_PROFILE_HPP_
