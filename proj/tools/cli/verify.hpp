#ifndef RPISO_TOOLS_VERIFY_HPP_
#define RPISO_TOOLS_VERIFY_HPP_

#include <map>
#include <string>
#include <vector>

namespace rpiso::cli {

// Thresholds used by the verification suite.  Each can be overridden
// from the command line with --tol name=value.
struct VerifyTolerances {
  double profile_symmetry = 1e-8;
  double envelope = 1e-9;
  double stability_endpoint = 1e-9;
  double identity = 1e-12;
  double transport = 1e-12;
  double cossin = 1e-10;
  double sphere_area = 1e-12;
  double willmore_min = 1e-6;
  double willmore_constant = 1e-10;
  double finite_difference = 1e-5;
  double rp3_perimeter = 1e-9;
  double stable_slack = 1e-9;

  // Throws std::invalid_argument on an unknown name or a nonpositive value.
  void apply(const std::map<std::string, double>& overrides);
  static std::vector<std::string> names();
};

struct VerifyOptions {
  int max_dim = 10;   // ambient dimensions 3..max_dim
  int samples = 2000;  // volume samples per profile
  VerifyTolerances tol;
};

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

std::vector<CheckResult> run_verification(const VerifyOptions& options);

}  // namespace rpiso::cli

#endif  // RPISO_TOOLS_VERIFY_HPP_
