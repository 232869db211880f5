#include "emrate/geometry.hpp"

#include <cmath>

namespace emrate {

double Vec3::norm() const { return std::sqrt(x * x + y * y + z * z); }

Complex CVec3::dot(const CVec3& o) const {
  return std::conj(x) * o.x + std::conj(y) * o.y + std::conj(z) * o.z;
}

double CVec3::norm() const { return std::sqrt(std::norm(x) + std::norm(y) + std::norm(z)); }

CVec3 cross(const Vec3& a, const CVec3& v) {
  return {a.y * v.z - a.z * v.y,
          a.z * v.x - a.x * v.z,
          a.x * v.y - a.y * v.x};
}

Vec3 unit_wavevector(double theta, double phi) {
  const double st = std::sin(theta);
  return {st * std::cos(phi), st * std::sin(phi), std::cos(theta)};
}

namespace {

// sin_t >= 0 is sin(theta); the division by h_par is carried out analytically,
// so the components stay well conditioned down to the pole cutoff.
TransverseFrame frame_from_parts(double sin_t, double cos_t, double phi) {
  if (sin_t < pole_tolerance)
    throw PoleSingularity("transverse_frame: polarization basis undefined at k_parallel = 0");

  const double cp = std::cos(phi);
  const double sp = std::sin(phi);
  const Complex i{0.0, 1.0};

  TransverseFrame f;
  f.h = {sin_t * cp, sin_t * sp, cos_t};
  f.e1 = {i * (-sp), i * cp, 0.0};
  f.e2 = {-cos_t * cp, -cos_t * sp, sin_t};
  f.b1 = cross(f.h, f.e1);
  f.b2 = cross(f.h, f.e2);
  return f;
}

}  // namespace

TransverseFrame transverse_frame(double theta, double phi) {
  return frame_from_parts(std::sin(theta), std::cos(theta), phi);
}

TransverseFrame transverse_frame_cos(double cos_theta, double phi) {
  const double sin_t = std::sqrt((1.0 - cos_theta) * (1.0 + cos_theta));
  return frame_from_parts(sin_t, cos_theta, phi);
}

double completeness_residual(const TransverseFrame& frame) {
  const Complex e1[3] = {frame.e1.x, frame.e1.y, frame.e1.z};
  const Complex e2[3] = {frame.e2.x, frame.e2.y, frame.e2.z};
  const double h[3] = {frame.h.x, frame.h.y, frame.h.z};

  double worst = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const Complex sum = e1[i] * std::conj(e1[j]) + e2[i] * std::conj(e2[j]);
      const double target = (i == j ? 1.0 : 0.0) - h[i] * h[j];
      worst = std::max(worst, std::abs(sum - target));
    }
  }
  return worst;
}

}  // namespace emrate
