#ifndef RPISO_TOOLS_CLI_HPP_
#define RPISO_TOOLS_CLI_HPP_

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rpiso/profile.hpp"

namespace rpiso::cli {

enum class Command { Profile, Transitions, Stability, Willmore, Areas, Verify };
enum class OutputFormat { Csv, Json };

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  Command command = Command::Profile;
  // Dimension of RP^dim.  Hypersurfaces have dimension dim - 1.
  int ambient_dim = 7;
  // Volume samples for profile and verify; radius samples for willmore.
  int samples = 2000;
  Space space = Space::ProjectiveSpace;
  OutputFormat format = OutputFormat::Csv;
  std::optional<std::string> output_path;
  std::map<std::string, double> tolerance_overrides;

  // stability
  int n1 = 1;
  int n2 = 1;
  int scan = 100;

  // verify
  int max_dim = 10;
};

std::string to_string(Command command);
std::string to_string(OutputFormat format);

// Parses argv-style arguments (without the program name).  Returns the
// config, or an exit status when parsing ends the run: 0 after --help,
// kExitUsage on bad input (usage goes to err).
std::variant<RunConfig, int> parse_args(const std::vector<std::string>& args, std::ostream& out,
                                        std::ostream& err);

// Writes the report for config to out.  Exit status 0 on success,
// kExitCheckFailed when a verification check fails, kExitUsage when the
// config is rejected by the library.  Ignores config.output_path; the
// caller picks the stream.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Entry point used by main(): parse, open --out if given, run.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// CSV number formatting: 17 significant digits, '.' decimal point.
std::string format_real(double value);

}  // namespace rpiso::cli

#endif  // RPISO_TOOLS_CLI_HPP_
