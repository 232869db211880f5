#include "emrate/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace emrate {

namespace {

constexpr double pi = std::numbers::pi;

// Neumaier-compensated accumulator; summation order is fixed by the caller.
struct CompensatedSum {
  double sum = 0.0;
  double comp = 0.0;

  void add(double v) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v))
      comp += (sum - t) + v;
    else
      comp += (v - t) + sum;
    sum = t;
  }
  double value() const { return sum + comp; }
};

// Pairwise reduction with a fixed tree shape, independent of thread count.
double pairwise_sum(std::vector<double>& v, std::size_t lo, std::size_t hi) {
  if (hi - lo == 1) return v[lo];
  const std::size_t mid = lo + (hi - lo) / 2;
  return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

// Integrates f(i_theta) -> row partial over all theta rows.
template <typename RowFn>
double reduce_rows(int n_theta, Exec exec, RowFn&& row) {
  std::vector<double> partial(static_cast<std::size_t>(n_theta));
  const bool parallel = exec == Exec::parallel;
#pragma omp parallel for schedule(static) if (parallel)
  for (int i = 0; i < n_theta; ++i)
    partial[static_cast<std::size_t>(i)] = row(i);
  return pairwise_sum(partial, 0, partial.size());
}

double position_factor(DipoleAxis axis, double arg) {
  const double c = std::cos(arg);
  const double s = std::sin(arg);
  return axis == DipoleAxis::z ? c * c : s * s;
}

}  // namespace

void QuadratureSpec::validate() const {
  if (n_theta < 2)
    throw InvalidOrder("QuadratureSpec: n_theta must be >= 2, got " + std::to_string(n_theta));
  if (n_phi < 4)
    throw InvalidOrder("QuadratureSpec: n_phi must be >= 4, got " + std::to_string(n_phi));
}

GaussLegendre gauss_legendre_nodes(int n) {
  if (n < 2) throw InvalidOrder("gauss_legendre_nodes: order must be >= 2, got " + std::to_string(n));

  GaussLegendre rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));

  // Newton iteration on P_n from the Chebyshev-like initial guess; roots are
  // symmetric, so only the upper half is solved and the rest mirrored. k = 0
  // targets the root nearest +1, descending from there.
  const int half = (n + 1) / 2;
  for (int k = 0; k < half; ++k) {
    double x = std::cos(pi * (k + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      // three-term recurrence for P_n(x) and P_{n-1}(x)
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[static_cast<std::size_t>(k)] = -x;
    rule.weights[static_cast<std::size_t>(k)] = w;
    rule.nodes[static_cast<std::size_t>(n - 1 - k)] = x;
    rule.weights[static_cast<std::size_t>(n - 1 - k)] = w;
  }
  return rule;
}

double rate_numeric(DipoleAxis axis, const AtomConfig& cfg, const QuadratureSpec& spec,
                    PhysicsToggles toggles, Exec exec) {
  cfg.validate();
  spec.validate();

  const GaussLegendre gl = gauss_legendre_nodes(spec.n_theta);
  const double w_phi = 2.0 * pi / spec.n_phi;
  const double Z = cfg.plate_distance;

  const double total = reduce_rows(spec.n_theta, exec, [&](int i) {
    const double u = gl.nodes[static_cast<std::size_t>(i)];
    CompensatedSum row;
    for (int j = 0; j < spec.n_phi; ++j) {
      const double phi = w_phi * j;
      const TransverseFrame frame = transverse_frame_cos(u, phi);
      const double w_plus = emitted_frequency(cfg, frame.h.x, toggles.recoil);
      const double g = jacobian(cfg, w_plus, frame.h.x, toggles.recoil);
      const PolarizationPair f = f_exact(axis, frame, cfg, w_plus, toggles.rontgen);
      const double t = position_factor(axis, frame.h.z * w_plus * Z / 2.0);
      row.add(w_plus * w_plus * w_plus * (f.f1 + f.f2) / g * t);
    }
    return gl.weights[static_cast<std::size_t>(i)] * w_phi * row.value();
  });

  return 3.0 / (4.0 * pi) * total;
}

double rate_numeric_fixed(DipoleAxis axis, double Z, const QuadratureSpec& spec, Exec exec) {
  if (!(Z >= 0.0))
    throw std::invalid_argument("rate_numeric_fixed: Z must be >= 0");
  spec.validate();

  const GaussLegendre gl = gauss_legendre_nodes(spec.n_theta);
  const double w_phi = 2.0 * pi / spec.n_phi;

  const double total = reduce_rows(spec.n_theta, exec, [&](int i) {
    const double u = gl.nodes[static_cast<std::size_t>(i)];
    const double sin_t = std::sqrt((1.0 - u) * (1.0 + u));
    const double t = position_factor(axis, u * Z / 2.0);
    CompensatedSum row;
    for (int j = 0; j < spec.n_phi; ++j) {
      const double phi = w_phi * j;
      double h_axis = 0.0;
      switch (axis) {
        case DipoleAxis::x: h_axis = sin_t * std::cos(phi); break;
        case DipoleAxis::y: h_axis = sin_t * std::sin(phi); break;
        case DipoleAxis::z: h_axis = u; break;
      }
      row.add((1.0 - h_axis * h_axis) * t);
    }
    return gl.weights[static_cast<std::size_t>(i)] * w_phi * row.value();
  });

  return 3.0 / (4.0 * pi) * total;
}

}  // namespace emrate
