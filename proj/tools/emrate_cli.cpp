// emrate: spontaneous emission rates of a uniformly moving two-level atom
// near a perfectly conducting plate.
//
// Subcommands:
//   rate         closed-form and/or quadrature rate at one plate distance
//   scan         CSV (and optional SVG) of the correction curves vs Z
//   verify       run the numerical property suite
//   extrapolate  Richardson slope of the exact rate vs the closed forms
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 validity-guard violation, 4 I/O error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "emrate/analysis.hpp"
#include "emrate/csv.hpp"
#include "emrate/svg.hpp"
#include "emrate/verify.hpp"

namespace {

using namespace emrate;

constexpr int exit_ok = 0;
constexpr int exit_verify_failed = 1;
constexpr int exit_usage = 2;
constexpr int exit_guard = 3;
constexpr int exit_io = 4;

QuadratureSpec parse_quad_nodes(const std::string& s) {
  const auto sep = s.find_first_of("x:");
  if (sep == std::string::npos || sep == 0 || sep + 1 >= s.size())
    throw std::invalid_argument("--quad-nodes expects NthetaxNphi, e.g. 64x64");
  QuadratureSpec spec;
  spec.n_theta = std::stoi(s.substr(0, sep));
  spec.n_phi = std::stoi(s.substr(sep + 1));
  spec.validate();
  return spec;
}

struct ZRange {
  double start, stop;
  int count;
};

ZRange parse_z_range(const std::string& s) {
  ZRange r;
  char c1 = 0, c2 = 0;
  std::istringstream in(s);
  if (!(in >> r.start >> c1 >> r.stop >> c2 >> r.count) || c1 != ':' || c2 != ':' ||
      !in.eof())
    throw std::invalid_argument("--Z-range expects start:stop:count");
  if (!(r.start > 0.0) || !(r.stop >= r.start) || r.count < 1)
    throw std::invalid_argument("--Z-range requires 0 < start <= stop and count >= 1");
  return r;
}

std::vector<double> parse_mu_list(const std::string& s) {
  std::vector<double> mu;
  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) mu.push_back(std::stod(item));
  if (mu.size() < 2)
    throw std::invalid_argument("--mu expects at least two comma-separated masses");
  return mu;
}

// stdout by default, a file when a path is given; fails with exit_io.
class OutputTarget {
 public:
  explicit OutputTarget(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw std::ios_base::failure("cannot open output path: " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }
  void finish() {
    if (file_.is_open()) {
      file_.flush();
      if (!file_) throw std::ios_base::failure("write failed");
    }
  }

 private:
  std::ofstream file_;
};

struct CommonArgs {
  std::string dipole = "z";
  double Z = 1.0;
  double mass_ratio = 1e6;
  double velocity = 0.0;  // rho/mu
  std::string quad_nodes = "64x64";
  std::string output;
  bool force = false;
};

void warn_if_relativistic(const AtomConfig& cfg) {
  if (!cfg.nonrelativistic())
    std::cerr << "warning: rho/mu = " << std::abs(cfg.momentum) / cfg.mass_ratio
              << " exceeds the nonrelativistic bound 0.01\n";
}

// Returns false when the validity guard blocks the run (no --force).
bool guard_or_force(double Z, double mu, bool force) {
  if (Z <= 0.01 * mu) return true;
  if (force) {
    std::cerr << "warning: Z = " << Z << " outside the first-order validity region "
              << "Z <= 0.01*mu for mu = " << mu << " (forced)\n";
    return true;
  }
  std::cerr << "error: Z = " << Z << " outside the first-order validity region "
            << "Z <= 0.01*mu for mu = " << mu << " (use --force to override)\n";
  return false;
}

int run_rate(const CommonArgs& a, const std::string& mode) {
  const DipoleAxis axis = axis_from_letter(a.dipole);
  const QuadratureSpec spec = parse_quad_nodes(a.quad_nodes);
  if (!(a.Z >= 0.0)) throw std::invalid_argument("--Z must be >= 0");

  std::ostringstream line;
  line << "axis=" << axis_letter(axis) << " Z=" << format_sig(a.Z) << " mode=" << mode;

  if (mode == "closed" || mode == "both") {
    const RateBreakdown b = breakdown(axis, a.Z);
    line << " gamma_boundary=" << format_sig(b.gamma_boundary)
         << " c_total=" << format_sig(b.c_total)
         << " c_rontgen=" << format_sig(b.c_rontgen)
         << " c_recoil=" << format_sig(b.c_recoil);
  }
  if (mode == "quadrature" || mode == "both") {
    const AtomConfig cfg{a.mass_ratio, a.velocity * a.mass_ratio, a.Z};
    cfg.validate();
    warn_if_relativistic(cfg);
    if (!guard_or_force(a.Z, a.mass_ratio, a.force)) return exit_guard;
    const double rate = rate_numeric(axis, cfg, spec);
    line << " mass_ratio=" << format_sig(a.mass_ratio)
         << " velocity=" << format_sig(a.velocity)
         << " gamma_quadrature=" << format_sig(rate);
  }

  OutputTarget out(a.output);
  out.stream() << line.str() << '\n';
  out.finish();
  return exit_ok;
}

int run_scan(const CommonArgs& a, const ZRange& range, const std::string& svg_path) {
  const DipoleAxis axis = axis_from_letter(a.dipole);
  const std::vector<double> grid = linear_grid(range.start, range.stop, range.count);
  const std::vector<ScanRow> rows = scan(axis, grid);

  OutputTarget out(a.output);
  write_scan_csv(out.stream(), rows);
  out.finish();

  if (!svg_path.empty()) {
    std::ofstream svg(svg_path, std::ios::binary);
    if (!svg) throw std::ios_base::failure("cannot open SVG path: " + svg_path);
    write_correction_chart(svg, rows);
    if (!svg) throw std::ios_base::failure("SVG write failed");
  }
  return exit_ok;
}

int run_verify(const std::string& quad_nodes, std::uint64_t seed) {
  VerifyOptions opt;
  opt.quad = parse_quad_nodes(quad_nodes);
  opt.seed = seed;
  const std::vector<CheckResult> results = run_verification(opt);
  for (const CheckResult& r : results)
    std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name
              << "  (worst " << format_sig(r.worst, 3) << ", tol "
              << format_sig(r.tolerance, 3) << ")\n";
  return all_passed(results) ? exit_ok : exit_verify_failed;
}

int run_extrapolate(const CommonArgs& a, const std::string& mu_arg, bool rontgen_only,
                    bool recoil_only) {
  if (rontgen_only && recoil_only)
    throw std::invalid_argument("--rontgen-only and --recoil-only are exclusive");
  const DipoleAxis axis = axis_from_letter(a.dipole);
  const QuadratureSpec spec = parse_quad_nodes(a.quad_nodes);
  const std::vector<double> mu_list = parse_mu_list(mu_arg);
  if (!(a.Z > 0.0)) throw std::invalid_argument("--Z must be > 0");

  if (!guard_or_force(a.Z, mu_list.front(), a.force)) return exit_guard;

  // One absolute momentum across the mass list, anchored at the smallest mass,
  // keeps the Doppler footprint inside the 1/mu extrapolation model.
  const double rho = a.velocity * mu_list.front();

  const bool enforce_guard = !a.force;
  SlopeEstimate est;
  double target = 0.0;
  std::string label;
  if (rontgen_only) {
    est = rontgen_toggle_slope(axis, a.Z, mu_list, spec, true, false, enforce_guard);
    target = correction_rontgen(axis, a.Z);
    label = "c_rontgen";
  } else if (recoil_only) {
    est = rontgen_toggle_slope(axis, a.Z, mu_list, spec, false, true, enforce_guard);
    target = correction_recoil(axis, a.Z);
    label = "c_recoil";
  } else {
    est = first_order_slope(axis, a.Z, mu_list, rho, spec, enforce_guard);
    target = correction_total(axis, a.Z);
    label = "c_total";
  }

  OutputTarget out(a.output);
  std::ostream& os = out.stream();
  for (std::size_t i = 0; i < est.mu_list.size(); ++i)
    os << "mu=" << format_sig(est.mu_list[i]) << " s=" << format_sig(est.samples[i])
       << '\n';
  const double denom = std::max(std::abs(target), 0.1);
  os << "slope=" << format_sig(est.slope)
     << " error_estimate=" << format_sig(est.error_estimate) << " target_" << label
     << "=" << format_sig(target)
     << " relative_deviation=" << format_sig(std::abs(est.slope - target) / denom)
     << '\n';
  out.finish();
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spontaneous emission of a moving atom near a conducting plate"};
  app.require_subcommand(1);

  CommonArgs args;
  std::string mode = "closed";
  std::string z_range_arg;
  std::string svg_path;
  std::string mu_arg = "1e4,2e4,4e4";
  std::uint64_t seed = 20240801;
  bool rontgen_only = false, recoil_only = false;

  auto add_common = [&args](CLI::App* cmd, bool with_quadrature) {
    cmd->add_option("--dipole", args.dipole, "dipole axis: x, y or z")
        ->check(CLI::IsMember({"x", "y", "z"}));
    cmd->add_option("--output", args.output, "output path (default stdout)");
    if (with_quadrature) {
      cmd->add_option("--mass-ratio", args.mass_ratio, "mu = m/omega0");
      cmd->add_option("--velocity", args.velocity, "rho/mu (canonical momentum over mass)");
      cmd->add_option("--quad-nodes", args.quad_nodes, "solid-angle nodes NthetaxNphi");
      cmd->add_flag("--force", args.force, "proceed past the Z <= 0.01*mu guard");
    }
  };

  CLI::App* rate = app.add_subcommand("rate", "rate at a single plate distance");
  add_common(rate, true);
  rate->add_option("--Z", args.Z, "dimensionless plate distance Z = 2 z omega0");
  rate->add_option("--mode", mode, "closed, quadrature, or both")
      ->check(CLI::IsMember({"closed", "quadrature", "both"}));

  CLI::App* scan_cmd = app.add_subcommand("scan", "correction curves over a Z grid (CSV)");
  add_common(scan_cmd, false);
  scan_cmd->add_option("--Z-range", z_range_arg, "grid start:stop:count (inclusive)")
      ->required();
  scan_cmd->add_option("--svg", svg_path, "also write an SVG chart");

  CLI::App* verify_cmd = app.add_subcommand("verify", "run the property suite");
  verify_cmd->add_option("--quad-nodes", args.quad_nodes, "solid-angle nodes NthetaxNphi");
  verify_cmd->add_option("--seed", seed, "seed for randomized checks");

  CLI::App* extrap = app.add_subcommand("extrapolate",
                                        "Richardson slope vs closed-form correction");
  add_common(extrap, true);
  extrap->get_option("--quad-nodes")->default_str("128x128");
  extrap->add_option("--Z", args.Z, "dimensionless plate distance");
  extrap->add_option("--mu", mu_arg, "comma-separated mass list, increasing");
  extrap->add_flag("--rontgen-only", rontgen_only, "keep only the Rontgen 1/mu terms");
  extrap->add_flag("--recoil-only", recoil_only, "keep only the recoil term in D");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (rate->parsed()) return run_rate(args, mode);
    if (scan_cmd->parsed()) return run_scan(args, parse_z_range(z_range_arg), svg_path);
    if (verify_cmd->parsed()) return run_verify(args.quad_nodes, seed);
    if (extrap->parsed()) {
      if (!extrap->get_option("--quad-nodes")->count()) args.quad_nodes = "128x128";
      return run_extrapolate(args, mu_arg, rontgen_only, recoil_only);
    }
  } catch (const GuardViolation& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_guard;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_io;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}
