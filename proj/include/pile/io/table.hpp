#pragma once

#include <ostream>
#include <string>

#include "pile/analytic.hpp"
#include "pile/nullpoint.hpp"

// Deterministic text output: CSV (fixed column order, '.' decimal point,
// LF endings) and the human-readable null point table.

namespace pile::io {

enum class DepthFrom { Tip, Head };

// Columns: x_m (or depth_m), u/eps/sig split into thermal, mech, combined.
void write_profile_csv(std::ostream& out, const ResponseProfile& profile,
                       double pile_length, DepthFrom depth_from);

// Columns: eta, x0bar_m (empty when absent), exists_flag, max_sigma_Pa,
// max_sigma_location_m.
void write_sweep_csv(std::ostream& out, const SweepResult& sweep, double pile_length,
                     DepthFrom depth_from);

std::string report_table(const NullPointReport& report, const PileSystem& system);

const char* existence_name(Existence existence);
const char* scenario_pair_name(ScenarioPair pair);

}  // namespace pile::io
