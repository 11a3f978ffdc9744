#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "rpiso/clifford.hpp"
#include "rpiso/specfn.hpp"
#include "rpiso/spectrum.hpp"
#include "rpiso/willmore.hpp"
#include "verify.hpp"

namespace rpiso::cli {
namespace {

using nlohmann::json;

constexpr int kDefaultWillmoreSamples = 10000;

const char* kWidthNote =
    "width is the balanced minimal Clifford area as written; the projective quotient "
    "would halve it, and the source notation does not settle which is meant";

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

// JSON has no infinity; null stands in for an unbounded endpoint.
json real_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

json config_json(const RunConfig& c) {
  json j;
  j["command"] = to_string(c.command);
  j["ambient_dim"] = c.ambient_dim;
  j["samples"] = c.samples;
  j["space"] = to_string(c.space);
  j["format"] = to_string(c.format);
  j["output_path"] = c.output_path ? json(*c.output_path) : json(nullptr);
  j["tolerance_overrides"] = json::object();
  for (const auto& [name, value] : c.tolerance_overrides) j["tolerance_overrides"][name] = value;
  j["n1"] = c.n1;
  j["n2"] = c.n2;
  j["scan"] = c.scan;
  j["max_dim"] = c.max_dim;
  return j;
}

void emit_json(std::ostream& out, const RunConfig& c, json results) {
  json doc;
  doc["schema_version"] = "1";
  doc["config"] = config_json(c);
  doc["results"] = std::move(results);
  out << doc.dump(2) << '\n';
}

int run_profile(const RunConfig& c, std::ostream& out) {
  const auto curve = profile_curve(c.ambient_dim, c.samples, c.space);
  if (c.format == OutputFormat::Csv) {
    out << "volume,perimeter,best_k,best_r\n";
    for (const ProfilePoint& p : curve) {
      out << format_real(p.volume) << ',' << format_real(p.perimeter) << ',' << p.best_k << ','
          << format_real(p.best_r) << '\n';
    }
    return kExitOk;
  }
  json rows = json::array();
  for (const ProfilePoint& p : curve) {
    rows.push_back({{"volume", p.volume}, {"perimeter", p.perimeter}, {"best_k", p.best_k}, {"best_r", p.best_r}});
  }
  emit_json(out, c, {{"total_volume", total_volume(c.ambient_dim, c.space)}, {"points", rows}});
  return kExitOk;
}

int run_transitions(const RunConfig& c, std::ostream& out) {
  const auto crossings = transition_volumes(c.ambient_dim, c.space);
  std::vector<double> perimeters;
  for (const Transition& t : crossings) {
    perimeters.push_back(perimeter_at_volume(TubeFamily(c.ambient_dim, t.k, c.space), t.volume));
  }
  if (c.format == OutputFormat::Csv) {
    out << "k,k_next,volume,perimeter\n";
    for (std::size_t i = 0; i < crossings.size(); ++i) {
      out << crossings[i].k << ',' << crossings[i].k_next << ',' << format_real(crossings[i].volume) << ','
          << format_real(perimeters[i]) << '\n';
    }
    return kExitOk;
  }
  json rows = json::array();
  for (std::size_t i = 0; i < crossings.size(); ++i) {
    rows.push_back({{"k", crossings[i].k},
                    {"k_next", crossings[i].k_next},
                    {"volume", crossings[i].volume},
                    {"perimeter", perimeters[i]}});
  }
  emit_json(out, c, {{"total_volume", total_volume(c.ambient_dim, c.space)}, {"transitions", rows}});
  return kExitOk;
}

int run_stability(const RunConfig& c, std::ostream& out) {
  struct Row {
    double r;
    StabilityReport report;
    bool in_interval;
  };
  std::vector<Row> rows;
  for (int i = 0; i < c.scan; ++i) {
    const double r = (i + 1.0) / (c.scan + 1.0) * (std::numbers::pi / 2);
    const StabilityReport rep = analyze_stability(CliffordShape(c.n1, c.n2, r));
    const double t = std::tan(r);
    rows.push_back({r, rep, t >= rep.interval_lo && t <= rep.interval_hi});
  }
  if (c.format == OutputFormat::Csv) {
    out << "r,lambda1,margin,in_interval\n";
    for (const Row& row : rows) {
      out << format_real(row.r) << ',' << format_real(row.report.lambda1) << ',' << format_real(row.report.margin)
          << ',' << (row.in_interval ? 1 : 0) << '\n';
    }
    return kExitOk;
  }
  json arr = json::array();
  for (const Row& row : rows) {
    arr.push_back({{"r", row.r},
                   {"lambda1", row.report.lambda1},
                   {"margin", row.report.margin},
                   {"stable", row.report.stable},
                   {"in_interval", row.in_interval}});
  }
  const StabilityReport first = rows.empty() ? analyze_stability(CliffordShape(c.n1, c.n2, 0.5)) : rows[0].report;
  emit_json(out, c,
            {{"tan_interval", {real_or_null(first.interval_lo), real_or_null(first.interval_hi)}},
             {"radius_interval",
              {std::atan(first.interval_lo), std::isfinite(first.interval_hi) ? std::atan(first.interval_hi)
                                                                              : std::numbers::pi / 2}},
             {"scan", arr}});
  return kExitOk;
}

int run_willmore(const RunConfig& c, std::ostream& out) {
  const int n = c.ambient_dim - 1;
  const WillmoreReport rep = willmore_report(n, c.samples);
  std::vector<EnergyMinimum> per_k;
  for (int k = 0; k <= n; ++k) per_k.push_back(energy_minimum_for_k(n, k, c.samples));
  if (c.format == OutputFormat::Csv) {
    out << "k,best_r,min_energy,ratio_to_width\n";
    for (const EnergyMinimum& m : per_k) {
      out << m.k << ',' << format_real(m.r) << ',' << format_real(m.value) << ','
          << format_real(m.value / rep.width) << '\n';
    }
    return kExitOk;
  }
  json rows = json::array();
  for (const EnergyMinimum& m : per_k) {
    rows.push_back({{"k", m.k}, {"best_r", m.r}, {"min_energy", m.value}, {"ratio_to_width", m.value / rep.width}});
  }
  emit_json(out, c,
            {{"n", rep.n},
             {"sigma_n", rep.sigma_n},
             {"width", rep.width},
             {"width_note", kWidthNote},
             {"chain_ok", rep.chain_ok},
             {"convexity_ok", rep.convexity_ok},
             {"min_energy", rep.min_energy},
             {"argmin", {{"k", rep.argmin_k}, {"r", rep.argmin_r}}},
             {"families", rows}});
  return kExitOk;
}

int run_areas(const RunConfig& c, std::ostream& out) {
  const int n = c.ambient_dim - 1;
  if (n < 2) throw std::invalid_argument("areas: --dim must be >= 3");
  const double two_sphere = 2 * sphere_area(n);
  const double sigma = sigma_n(n);
  if (c.format == OutputFormat::Csv) {
    out << "p,clifford_area,two_sphere_area,sigma_n,logf_second_derivative\n";
    for (int p = 1; p < n; ++p) {
      out << p << ',' << format_real(clifford_area_f(n, p)) << ',' << format_real(two_sphere) << ','
          << format_real(sigma) << ',' << format_real(logf_second_derivative(n, p)) << '\n';
    }
    return kExitOk;
  }
  json rows = json::array();
  for (int p = 1; p < n; ++p) {
    rows.push_back({{"p", p},
                    {"clifford_area", clifford_area_f(n, p)},
                    {"logf_second_derivative", logf_second_derivative(n, p)}});
  }
  emit_json(out, c,
            {{"n", n},
             {"two_sphere_area", two_sphere},
             {"sigma_n", sigma},
             {"chain_ok", verify_area_chain(n)},
             {"areas", rows}});
  return kExitOk;
}

int run_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
  VerifyOptions opt;
  opt.max_dim = c.max_dim;
  opt.samples = c.samples;
  opt.tol.apply(c.tolerance_overrides);
  const auto checks = run_verification(opt);
  bool all = true;
  for (const CheckResult& r : checks) all = all && r.passed;
  if (c.format == OutputFormat::Csv) {
    out << "check,passed,detail\n";
    for (const CheckResult& r : checks) {
      out << csv_field(r.name) << ',' << (r.passed ? 1 : 0) << ',' << csv_field(r.detail) << '\n';
    }
  } else {
    json rows = json::array();
    for (const CheckResult& r : checks) {
      rows.push_back({{"check", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    }
    emit_json(out, c, {{"all_passed", all}, {"checks", rows}});
  }
  if (!all) {
    for (const CheckResult& r : checks) {
      if (!r.passed) err << "FAILED " << r.name << ": " << r.detail << '\n';
    }
    return kExitCheckFailed;
  }
  return kExitOk;
}

}  // namespace

std::string to_string(Command command) {
  switch (command) {
    case Command::Profile: return "profile";
    case Command::Transitions: return "transitions";
    case Command::Stability: return "stability";
    case Command::Willmore: return "willmore";
    case Command::Areas: return "areas";
    case Command::Verify: return "verify";
  }
  return "unknown";
}

std::string to_string(OutputFormat format) { return format == OutputFormat::Csv ? "csv" : "json"; }

std::string format_real(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::variant<RunConfig, int> parse_args(const std::vector<std::string>& args, std::ostream& out,
                                        std::ostream& err) {
  RunConfig config;
  std::string space = "rp";
  std::string format = "csv";
  std::string output;
  std::vector<std::string> tolerances;
  int willmore_samples = kDefaultWillmoreSamples;

  CLI::App app{"Isoperimetric profiles, Clifford stability and Willmore tables for RP^n", "rpiso"};
  app.require_subcommand(1);
  app.add_option("--space", space, "rp (projective quotient) or sphere (antipodal-invariant)")
      ->check(CLI::IsMember({"rp", "sphere"}));
  app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", output, "write the report to PATH instead of stdout");

  const auto add_dim = [&](CLI::App* sub, int default_dim) {
    sub->add_option("--dim", config.ambient_dim, "ambient dimension of RP^dim")
        ->default_val(default_dim)
        ->check(CLI::Range(2, 400));
  };

  CLI::App* profile = app.add_subcommand("profile", "isoperimetric profile as a lower envelope of tubes");
  add_dim(profile, 7);
  profile->add_option("--samples", config.samples, "number of volume samples")
      ->default_val(2000)
      ->check(CLI::Range(2, 10'000'000));

  CLI::App* transitions = app.add_subcommand("transitions", "volumes where the optimal tube changes");
  add_dim(transitions, 7);

  CLI::App* stability = app.add_subcommand("stability", "stability scan of a Clifford hypersurface");
  stability->add_option("--n1", config.n1, "dimension of the first sphere factor")->check(CLI::Range(0, 1000));
  stability->add_option("--n2", config.n2, "dimension of the second sphere factor")->check(CLI::Range(0, 1000));
  stability->add_option("--scan", config.scan, "number of radii")->check(CLI::Range(1, 10'000'000));

  CLI::App* willmore = app.add_subcommand("willmore", "Willmore energy minima over tube families");
  add_dim(willmore, 7);
  willmore->add_option("--samples", willmore_samples, "radius grid size")->check(CLI::Range(1000, 100'000'000));

  CLI::App* areas = app.add_subcommand("areas", "Clifford area chain and log-convexity data");
  add_dim(areas, 7);

  CLI::App* verify = app.add_subcommand("verify", "run the verification suite");
  verify->add_option("--max-dim", config.max_dim, "largest ambient dimension checked")->check(CLI::Range(3, 64));
  verify->add_option("--samples", config.samples, "volume samples per profile")
      ->default_val(2000)
      ->check(CLI::Range(100, 10'000'000));
  verify->add_option("--tol", tolerances, "override a threshold, NAME=VALUE (repeatable)");

  for (CLI::App* sub : {profile, transitions, stability, willmore, areas, verify}) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (profile->parsed()) config.command = Command::Profile;
  if (transitions->parsed()) config.command = Command::Transitions;
  if (stability->parsed()) config.command = Command::Stability;
  if (willmore->parsed()) {
    config.command = Command::Willmore;
    config.samples = willmore_samples;
  }
  if (areas->parsed()) config.command = Command::Areas;
  if (verify->parsed()) config.command = Command::Verify;

  config.space = space == "sphere" ? Space::SphereAntipodal : Space::ProjectiveSpace;
  config.format = format == "json" ? OutputFormat::Json : OutputFormat::Csv;
  if (!output.empty()) config.output_path = output;

  for (const std::string& item : tolerances) {
    const auto eq = item.find('=');
    double value = 0.0;
    try {
      if (eq == std::string::npos) throw std::invalid_argument("missing '='");
      std::size_t used = 0;
      value = std::stod(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      err << "error: --tol expects NAME=VALUE, got '" << item << "'\n";
      return kExitUsage;
    }
    config.tolerance_overrides[item.substr(0, eq)] = value;
  }
  try {
    VerifyTolerances probe;
    probe.apply(config.tolerance_overrides);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return config;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case Command::Profile: return run_profile(config, out);
      case Command::Transitions: return run_transitions(config, out);
      case Command::Stability: return run_stability(config, out);
      case Command::Willmore: return run_willmore(config, out);
      case Command::Areas: return run_areas(config, out);
      case Command::Verify: return run_verify(config, out, err);
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  return kExitUsage;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  auto parsed = parse_args(args, out, err);
  if (const int* status = std::get_if<int>(&parsed)) return *status;
  const RunConfig& config = std::get<RunConfig>(parsed);
  if (!config.output_path) return run(config, out, err);
  std::ofstream file(*config.output_path, std::ios::binary);
  if (!file) {
    err << "error: cannot open '" << *config.output_path << "' for writing\n";
    return kExitUsage;
  }
  const int status = run(config, file, err);
  file.flush();
  if (!file) {
    err << "error: write to '" << *config.output_path << "' failed\n";
    return kExitCheckFailed;
  }
  return status;
}

}  // namespace rpiso::cli
