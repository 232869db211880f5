// End-to-end checks of the emrate binary: flags, exit codes, output formats.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

#include "emrate/closed_forms.hpp"

using namespace emrate;
namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(EMRATE_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof(buf), pipe)) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

// pulls `key=<number>` out of a record line
double field(const std::string& text, const std::string& key) {
  const auto pos = text.find(key + "=");
  REQUIRE(pos != std::string::npos);
  return std::stod(text.substr(pos + key.size() + 1));
}

std::string temp_path(const std::string& name) {
  return (fs::temp_directory_path() / ("emrate_test_" + std::to_string(getpid()) +
                                       "_" + name)).string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string drop_axis_column(const std::string& csv) {
  std::istringstream in(csv);
  std::ostringstream out;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find(',');
    const auto second = line.find(',', first + 1);
    out << line.substr(0, first) << line.substr(second) << '\n';
  }
  return out.str();
}

}  // namespace

TEST_CASE("rate: closed form at Z = pi") {
  const RunResult r = run("rate --dipole z --Z 3.14159265 --mode closed");
  CHECK(r.exit_code == 0);
  CHECK(std::abs(field(r.out, "gamma_boundary") - 1.3039635509) < 1e-6);
  CHECK(r.out.find("axis=z") != std::string::npos);
}

TEST_CASE("rate: parallel dipole contact limit") {
  const RunResult r = run("rate --dipole y --Z 1e-6 --mode closed");
  CHECK(r.exit_code == 0);
  CHECK(std::abs(field(r.out, "c_total")) < 1e-5);
  CHECK(std::abs(field(r.out, "c_rontgen")) < 1e-5);
  CHECK(std::abs(field(r.out, "c_recoil")) < 1e-5);
}

TEST_CASE("rate: quadrature at near-infinite mass hits the fixed-atom value") {
  const RunResult r =
      run("rate --dipole z --Z 1 --mode quadrature --mass-ratio 1e12");
  CHECK(r.exit_code == 0);
  CHECK(std::abs(field(r.out, "gamma_quadrature") - 1.9035060368192704) < 1e-8);
}

TEST_CASE("rate: both modes agree at large mass") {
  const RunResult r = run("rate --dipole y --Z 2 --mode both --mass-ratio 1e10");
  CHECK(r.exit_code == 0);
  CHECK(std::abs(field(r.out, "gamma_quadrature") - field(r.out, "gamma_boundary")) <
        1e-8);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("rate --dipole w --Z 1").exit_code == 2);
  CHECK(run("rate --no-such-flag").exit_code == 2);
  CHECK(run("").exit_code == 2);
  CHECK(run("scan --dipole z --Z-range 0:10:5").exit_code == 2);   // start must be > 0
  CHECK(run("rate --dipole z --Z 1 --quad-nodes 1x4").exit_code == 2);
  CHECK(run("--help").exit_code == 0);
}

TEST_CASE("validity guard exits with 3 unless forced") {
  const std::string args = "rate --dipole z --Z 100 --mass-ratio 1000 --mode quadrature";
  CHECK(run(args).exit_code == 3);
  CHECK(run(args + " --force").exit_code == 0);

  CHECK(run("extrapolate --dipole z --Z 200 --mu 1e4,2e4").exit_code == 3);
}

TEST_CASE("scan: CSV contract and determinism") {
  const std::string csv_z = temp_path("scan_z.csv");
  const std::string csv_z2 = temp_path("scan_z2.csv");
  const std::string csv_x = temp_path("scan_x.csv");
  const std::string csv_y = temp_path("scan_y.csv");

  CHECK(run("scan --dipole z --Z-range 0.1:10:100 --output " + csv_z).exit_code == 0);
  CHECK(run("scan --dipole z --Z-range 0.1:10:100 --output " + csv_z2).exit_code == 0);
  CHECK(run("scan --dipole x --Z-range 0.1:10:100 --output " + csv_x).exit_code == 0);
  CHECK(run("scan --dipole y --Z-range 0.1:10:100 --output " + csv_y).exit_code == 0);

  const std::string z_text = slurp(csv_z);
  CHECK(z_text.rfind("Z,axis,gamma_boundary,c_total,c_rontgen,c_recoil\n", 0) == 0);
  CHECK(std::count(z_text.begin(), z_text.end(), '\n') == 101);
  CHECK(z_text == slurp(csv_z2));  // byte-identical rerun

  // x and y scans differ only in the axis letter
  CHECK(drop_axis_column(slurp(csv_x)) == drop_axis_column(slurp(csv_y)));

  // row at Z = 1 carries the closed-form breakdown
  std::istringstream in(z_text);
  std::string line;
  bool found = false;
  while (std::getline(in, line)) {
    if (line.rfind("1,z,", 0) == 0) {
      found = true;
      std::istringstream row(line);
      std::string cell;
      std::vector<std::string> cells;
      while (std::getline(row, cell, ',')) cells.push_back(cell);
      REQUIRE(cells.size() == 6);
      const RateBreakdown b = breakdown(DipoleAxis::z, 1.0);
      CHECK(std::abs(std::stod(cells[2]) - b.gamma_boundary) < 1e-11);
      CHECK(std::abs(std::stod(cells[3]) - b.c_total) < 1e-11);
      CHECK(std::abs(std::stod(cells[4]) - b.c_rontgen) < 1e-11);
      CHECK(std::abs(std::stod(cells[5]) - b.c_recoil) < 1e-11);
    }
  }
  CHECK(found);

  for (const std::string& p : {csv_z, csv_z2, csv_x, csv_y}) fs::remove(p);
}

TEST_CASE("scan: sign columns and SVG output") {
  const std::string csv = temp_path("scan_signs.csv");
  const std::string svg = temp_path("chart.svg");
  CHECK(run("scan --dipole z --Z-range 0.1:10:100 --output " + csv + " --svg " + svg)
            .exit_code == 0);

  std::istringstream in(slurp(csv));
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    std::istringstream row(line);
    std::string cell;
    std::vector<std::string> cells;
    while (std::getline(row, cell, ',')) cells.push_back(cell);
    REQUIRE(cells.size() == 6);
    CHECK(std::stod(cells[4]) >= 0.0);  // c_rontgen
    CHECK(std::stod(cells[5]) <= 0.0);  // c_recoil
  }

  const std::string chart = slurp(svg);
  CHECK(chart.rfind("<svg", 0) == 0);
  CHECK(chart.find("</svg>") != std::string::npos);

  fs::remove(csv);
  fs::remove(svg);
}

TEST_CASE("scan: unwritable output exits with 4") {
  CHECK(run("scan --dipole z --Z-range 0.1:10:10 --output /no/such/dir/out.csv")
            .exit_code == 4);
}

TEST_CASE("verify: passes at the default resolution, fails under-resolved") {
  CHECK(run("verify").exit_code == 0);
  CHECK(run("verify --quad-nodes 8x8").exit_code == 1);
  CHECK(run("verify --seed 42").exit_code == 0);
  CHECK(run("verify --seed 43").exit_code == 0);
  // the colon separator form is accepted too
  CHECK(run("verify --quad-nodes 8:8").exit_code == 1);
}

TEST_CASE("extrapolate: slope report against closed forms") {
  const RunResult full = run("extrapolate --dipole z --Z 1 --mu 1e4,2e4,4e4");
  CHECK(full.exit_code == 0);
  CHECK(std::abs(field(full.out, "slope") - (-2.7622064772)) < 3e-3);
  CHECK(field(full.out, "relative_deviation") < 1e-3);
  CHECK(full.out.find("mu=10000 s=") != std::string::npos);

  const RunResult rontgen =
      run("extrapolate --dipole z --Z 1 --mu 1e4,2e4,4e4 --rontgen-only");
  CHECK(rontgen.exit_code == 0);
  CHECK(std::abs(field(rontgen.out, "slope") - 1.9035060368) < 2e-3);

  const RunResult recoil =
      run("extrapolate --dipole z --Z 1 --mu 1e4,2e4,4e4 --recoil-only");
  CHECK(recoil.exit_code == 0);
  CHECK(std::abs(field(recoil.out, "slope") - (-4.6657125140)) < 5e-3);

  CHECK(run("extrapolate --dipole z --Z 1 --mu 1e4,2e4 --rontgen-only --recoil-only")
            .exit_code == 2);
  CHECK(run("extrapolate --dipole z --Z 1 --mu 1e4").exit_code == 2);
}
