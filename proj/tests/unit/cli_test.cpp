#include "cli.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include "verify.hpp"

using namespace rpiso::cli;

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int status = main_entry(args, out, err);
  return {status, out.str(), err.str()};
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST_CASE("usage errors exit with status 2") {
  CHECK(invoke({}).status == kExitUsage);
  CHECK(invoke({"frobnicate"}).status == kExitUsage);
  CHECK(invoke({"profile", "--bogus"}).status == kExitUsage);
  CHECK(invoke({"profile", "--samples", "1"}).status == kExitUsage);
  CHECK(invoke({"profile", "--dim", "1"}).status == kExitUsage);
  CHECK(invoke({"profile", "--space", "cp"}).status == kExitUsage);
  CHECK(invoke({"profile", "--format", "xml"}).status == kExitUsage);
  CHECK(invoke({"verify", "--tol", "nonsense=1"}).status == kExitUsage);
  CHECK(invoke({"verify", "--tol", "identity"}).status == kExitUsage);
  CHECK(invoke({"verify", "--tol", "identity=-1"}).status == kExitUsage);
  const Result r = invoke({"profile", "--bogus"});
  CHECK(!r.err.empty());
  CHECK(r.out.empty());
}

TEST_CASE("help exits 0") {
  const Result r = invoke({"--help"});
  CHECK(r.status == kExitOk);
  CHECK(r.out.find("profile") != std::string::npos);
}

TEST_CASE("library rejections map to status 2") {
  // RP^2 has no transitions to bracket below dimension 3.
  CHECK(invoke({"transitions", "--dim", "2"}).status == kExitUsage);
  CHECK(invoke({"areas", "--dim", "2"}).status == kExitUsage);
}

TEST_CASE("parse_args resolves defaults per subcommand") {
  std::ostringstream out, err;
  auto p = parse_args({"willmore", "--dim", "5"}, out, err);
  REQUIRE(std::holds_alternative<RunConfig>(p));
  CHECK(std::get<RunConfig>(p).command == Command::Willmore);
  CHECK(std::get<RunConfig>(p).samples == 10000);
  CHECK(std::get<RunConfig>(p).ambient_dim == 5);

  p = parse_args({"profile", "--format", "json", "--space", "sphere"}, out, err);
  REQUIRE(std::holds_alternative<RunConfig>(p));
  const RunConfig c = std::get<RunConfig>(p);
  CHECK(c.ambient_dim == 7);
  CHECK(c.samples == 2000);
  CHECK(c.format == OutputFormat::Json);
  CHECK(c.space == rpiso::Space::SphereAntipodal);
  CHECK(!c.output_path);

  p = parse_args({"verify", "--tol", "identity=1e-10", "--max-dim", "5"}, out, err);
  REQUIRE(std::holds_alternative<RunConfig>(p));
  CHECK(std::get<RunConfig>(p).tolerance_overrides.at("identity") == 1e-10);
  CHECK(std::get<RunConfig>(p).max_dim == 5);
}

TEST_CASE("profile CSV shape") {
  const Result r = invoke({"profile", "--dim", "4", "--samples", "50"});
  REQUIRE(r.status == kExitOk);
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 51);
  CHECK(r.out.rfind("volume,perimeter,best_k,best_r\n", 0) == 0);
  CHECK(r.out.find('\r') == std::string::npos);
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].size() == 4);
  CHECK(rows[1][2] == "0");
  CHECK(rows.back()[2] == "3");
}

TEST_CASE("format_real round-trips") {
  for (double x : {std::numbers::pi, 1.0 / 3.0, 1e-300, 123456789.125}) {
    CHECK(std::stod(format_real(x)) == x);
  }
  CHECK(format_real(0.5) == "0.5");
}

TEST_CASE("JSON reports carry schema_version and the config") {
  for (const char* cmd : {"profile", "transitions", "stability", "willmore", "areas"}) {
    std::vector<std::string> args{cmd, "--format", "json"};
    if (std::string(cmd) == "profile") args.insert(args.end(), {"--samples", "20"});
    if (std::string(cmd) == "willmore") args.insert(args.end(), {"--dim", "3", "--samples", "1000"});
    const Result r = invoke(args);
    INFO(cmd);
    REQUIRE(r.status == kExitOk);
    CHECK(r.out.find("\"schema_version\": \"1\"") != std::string::npos);
    CHECK(r.out.find("\"command\": \"" + std::string(cmd) + "\"") != std::string::npos);
  }
  const Result w = invoke({"willmore", "--dim", "3", "--samples", "1000", "--format", "json"});
  CHECK(w.out.find("width_note") != std::string::npos);
}

TEST_CASE("output is byte-identical across runs") {
  const std::vector<std::string> args{"profile", "--dim", "6", "--samples", "300"};
  CHECK(invoke(args).out == invoke(args).out);
  const std::vector<std::string> w{"willmore", "--dim", "4", "--samples", "2000"};
  CHECK(invoke(w).out == invoke(w).out);
}

TEST_CASE("stability scan for the (1, 1) torus") {
  const Result r = invoke({"stability", "--n1", "1", "--n2", "1", "--scan", "100"});
  REQUIRE(r.status == kExitOk);
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 101);
  CHECK(rows[0] == std::vector<std::string>{"r", "lambda1", "margin", "in_interval"});
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double rad = std::stod(rows[i][0]);
    const double margin = std::stod(rows[i][2]);
    const bool inside = rad >= std::numbers::pi / 6 && rad <= std::numbers::pi / 3;
    CHECK(rows[i][3] == (inside ? "1" : "0"));
    // Negative outside [pi/6, pi/3], zero within rounding inside.
    if (inside) {
      CHECK(std::abs(margin) <= 1e-12);
    } else {
      CHECK(margin < -1e-6);
    }
  }
}

TEST_CASE("transitions for RP^7") {
  const Result r = invoke({"transitions", "--dim", "7"});
  REQUIRE(r.status == kExitOk);
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 7);
  for (int k = 0; k < 6; ++k) {
    CHECK(rows[k + 1][0] == std::to_string(k));
    CHECK(rows[k + 1][1] == std::to_string(k + 1));
  }
}

TEST_CASE("areas table") {
  const Result r = invoke({"areas", "--dim", "5"});
  REQUIRE(r.status == kExitOk);
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 4);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(std::stod(rows[i][1]) >= std::stod(rows[i][3]));
    CHECK(std::stod(rows[i][1]) < std::stod(rows[i][2]));
    CHECK(std::stod(rows[i][4]) > 0.0);
  }
}

TEST_CASE("verify on small dimensions passes; impossible tolerance fails") {
  Result r = invoke({"verify", "--max-dim", "4", "--samples", "300"});
  CHECK(r.status == kExitOk);
  CHECK(r.out.rfind("check,passed,detail\n", 0) == 0);
  CHECK(r.out.find(",0,") == std::string::npos);

  r = invoke({"verify", "--max-dim", "4", "--samples", "300", "--tol", "identity=1e-30"});
  CHECK(r.status == kExitCheckFailed);
  CHECK(r.err.find("beta_trace_identity") != std::string::npos);
}

TEST_CASE("tolerance names are all accepted") {
  for (const std::string& name : VerifyTolerances::names()) {
    VerifyTolerances t;
    CHECK_NOTHROW(t.apply({{name, 0.5}}));
  }
  VerifyTolerances t;
  t.apply({{"identity", 3e-12}});
  CHECK(t.identity == 3e-12);
}

TEST_CASE("--out writes the report to a file") {
  const std::string path = "cli_test_out.csv";
  const Result r = invoke({"areas", "--dim", "4", "--out", path});
  REQUIRE(r.status == kExitOk);
  CHECK(r.out.empty());
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == invoke({"areas", "--dim", "4"}).out);
  std::remove(path.c_str());
  CHECK(invoke({"areas", "--out", "/nonexistent-dir/x.csv"}).status == kExitUsage);
}
