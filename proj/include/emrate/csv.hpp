// Locale-independent numeric formatting and the scan CSV layout.

#ifndef EMRATE_CSV_HPP
#define EMRATE_CSV_HPP

#include <ostream>
#include <string>
#include <vector>

#include "emrate/analysis.hpp"

namespace emrate {

// 12-significant-digit decimal string via std::to_chars; byte-stable across
// runs, threads, and locales.
std::string format_sig(double value, int significant_digits = 12);

// Header exactly `Z,axis,gamma_boundary,c_total,c_rontgen,c_recoil`,
// \n line endings, one row per scan point.
void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows);

}  // namespace emrate

#endif
