// Self-contained SVG line chart of the three correction curves vs Z.

#ifndef EMRATE_SVG_HPP
#define EMRATE_SVG_HPP

#include <ostream>
#include <vector>

#include "emrate/analysis.hpp"

namespace emrate {

// One chart per dipole axis: c_total, c_rontgen, c_recoil against Z, axes
// labeled `Z` and `correction [Γ₀ω₀/m]`. rows must be non-empty.
void write_correction_chart(std::ostream& out, const std::vector<ScanRow>& rows);

}  // namespace emrate

#endif
