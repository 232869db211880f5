#include "emrate/svg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "emrate/csv.hpp"

namespace emrate {

namespace {

constexpr int width = 800;
constexpr int height = 520;
constexpr int margin_left = 80;
constexpr int margin_right = 24;
constexpr int margin_top = 40;
constexpr int margin_bottom = 64;

struct Mapper {
  double x0, x1, y0, y1;

  double px(double x) const {
    return margin_left + (x - x0) / (x1 - x0) * (width - margin_left - margin_right);
  }
  double py(double y) const {
    return height - margin_bottom -
           (y - y0) / (y1 - y0) * (height - margin_top - margin_bottom);
  }
};

// round tick spacing to 1/2/5 * 10^k covering roughly `target` intervals
double nice_step(double span, int target) {
  const double raw = span / target;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  const double r = raw / mag;
  if (r < 1.5) return mag;
  if (r < 3.5) return 2.0 * mag;
  if (r < 7.5) return 5.0 * mag;
  return 10.0 * mag;
}

std::string tick_label(double v) {
  // short label; strip the long tail format_sig would keep
  return format_sig(v, 6);
}

void polyline(std::ostream& out, const Mapper& m, const std::vector<ScanRow>& rows,
              double ScanRow::* field, const char* color) {
  out << "  <polyline fill=\"none\" stroke=\"" << color
      << "\" stroke-width=\"1.8\" points=\"";
  for (const ScanRow& r : rows)
    out << m.px(r.Z) << ',' << m.py(r.*field) << ' ';
  out << "\"/>\n";
}

}  // namespace

void write_correction_chart(std::ostream& out, const std::vector<ScanRow>& rows) {
  if (rows.empty())
    throw std::invalid_argument("write_correction_chart: no rows");

  double ymin = rows.front().c_total, ymax = ymin;
  for (const ScanRow& r : rows) {
    for (double v : {r.c_total, r.c_rontgen, r.c_recoil}) {
      ymin = std::min(ymin, v);
      ymax = std::max(ymax, v);
    }
  }
  if (ymin == ymax) {
    ymin -= 1.0;
    ymax += 1.0;
  }
  const double pad = 0.05 * (ymax - ymin);
  const Mapper m{rows.front().Z, rows.back().Z, ymin - pad, ymax + pad};

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' ' << height
      << "\">\n";
  out << "  <rect width=\"" << width << "\" height=\"" << height
      << "\" fill=\"white\"/>\n";

  // grid + ticks
  const double xstep = nice_step(m.x1 - m.x0, 8);
  const double ystep = nice_step(m.y1 - m.y0, 8);
  out << "  <g stroke=\"#ddd\" stroke-width=\"1\" font-size=\"12\" "
         "font-family=\"sans-serif\">\n";
  for (double x = std::ceil(m.x0 / xstep) * xstep; x <= m.x1 + 1e-12; x += xstep) {
    out << "    <line x1=\"" << m.px(x) << "\" y1=\"" << m.py(m.y0) << "\" x2=\""
        << m.px(x) << "\" y2=\"" << m.py(m.y1) << "\"/>\n";
    out << "    <text x=\"" << m.px(x) << "\" y=\"" << height - margin_bottom + 18
        << "\" fill=\"black\" stroke=\"none\" text-anchor=\"middle\">" << tick_label(x)
        << "</text>\n";
  }
  for (double y = std::ceil(m.y0 / ystep) * ystep; y <= m.y1 + 1e-12; y += ystep) {
    out << "    <line x1=\"" << m.px(m.x0) << "\" y1=\"" << m.py(y) << "\" x2=\""
        << m.px(m.x1) << "\" y2=\"" << m.py(y) << "\"/>\n";
    out << "    <text x=\"" << margin_left - 8 << "\" y=\"" << m.py(y) + 4
        << "\" fill=\"black\" stroke=\"none\" text-anchor=\"end\">" << tick_label(y)
        << "</text>\n";
  }
  out << "  </g>\n";

  // frame
  out << "  <rect x=\"" << margin_left << "\" y=\"" << margin_top << "\" width=\""
      << width - margin_left - margin_right << "\" height=\""
      << height - margin_top - margin_bottom
      << "\" fill=\"none\" stroke=\"black\"/>\n";

  polyline(out, m, rows, &ScanRow::c_total, "#1f77b4");
  polyline(out, m, rows, &ScanRow::c_rontgen, "#2ca02c");
  polyline(out, m, rows, &ScanRow::c_recoil, "#d62728");

  // axis labels + title + legend
  out << "  <g font-family=\"sans-serif\" font-size=\"14\">\n";
  out << "    <text x=\"" << (margin_left + width - margin_right) / 2 << "\" y=\""
      << height - 16 << "\" text-anchor=\"middle\">Z</text>\n";
  out << "    <text x=\"20\" y=\"" << (margin_top + height - margin_bottom) / 2
      << "\" text-anchor=\"middle\" transform=\"rotate(-90 20 "
      << (margin_top + height - margin_bottom) / 2
      << ")\">correction [Γ₀ω₀/m]</text>\n";
  out << "    <text x=\"" << (margin_left + width - margin_right) / 2
      << "\" y=\"24\" text-anchor=\"middle\">dipole axis "
      << axis_letter(rows.front().axis) << "</text>\n";
  const int lx = margin_left + 16;
  const char* names[3] = {"c_total", "c_rontgen", "c_recoil"};
  const char* colors[3] = {"#1f77b4", "#2ca02c", "#d62728"};
  for (int i = 0; i < 3; ++i) {
    const int ly = margin_top + 16 + 20 * i;
    out << "    <line x1=\"" << lx << "\" y1=\"" << ly - 4 << "\" x2=\"" << lx + 28
        << "\" y2=\"" << ly - 4 << "\" stroke=\"" << colors[i]
        << "\" stroke-width=\"2\"/>\n";
    out << "    <text x=\"" << lx + 34 << "\" y=\"" << ly << "\">" << names[i]
        << "</text>\n";
  }
  out << "  </g>\n</svg>\n";
}

}  // namespace emrate
