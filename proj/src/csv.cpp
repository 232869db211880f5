#include "emrate/csv.hpp"

#include <charconv>
#include <system_error>

namespace emrate {

std::string format_sig(double value, int significant_digits) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value,
                                 std::chars_format::general, significant_digits);
  if (res.ec != std::errc{}) return "nan";
  return std::string(buf, res.ptr);
}

void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows) {
  out << "Z,axis,gamma_boundary,c_total,c_rontgen,c_recoil\n";
  for (const ScanRow& r : rows) {
    out << format_sig(r.Z) << ',' << axis_letter(r.axis) << ','
        << format_sig(r.gamma_boundary) << ',' << format_sig(r.c_total) << ','
        << format_sig(r.c_rontgen) << ',' << format_sig(r.c_recoil) << '\n';
  }
}

}  // namespace emrate
