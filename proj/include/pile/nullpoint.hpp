#pragma once

#include <optional>
#include <vector>

#include "pile/analytic.hpp"
#include "pile/core_model.hpp"

// Combined null-point analysis for fully floating piles: closed-form null
// point location per load-scenario pair, the eta existence thresholds, and
// the location of the maximum stress magnitude.

namespace pile {

enum class ScenarioPair { SameSign, OppositeSign };  // I/IV vs II/III

enum class Existence { ExistsInterior, AtTip, AtHead, Absent };

struct EtaThresholds {
    // The published inequality bound, reproduced verbatim. For the
    // opposite-sign pair this disagrees with the in-pile condition; both
    // are reported so the discrepancy stays visible.
    double printed = 0.0;
    // Threshold derived from requiring the null point to lie in [0, L].
    double in_pile = 0.0;
};

struct MaxStress {
    double location = 0.0;  // [m] from the tip
    double value = 0.0;     // signed combined stress there [Pa]
};

struct NullPointReport {
    double thermal_null = 0.0;  // x_0 [m]
    std::optional<double> combined_null;
    Existence existence = Existence::Absent;
    std::optional<EtaThresholds> thresholds;  // absent for degenerate load cases
    MaxStress max_stress;
    Scenario scenario = Scenario::NullLoad;
    std::optional<double> eta;
};

// Positional tolerance (relative to L) for classifying a null point as
// sitting exactly at the tip or the head.
inline constexpr double kBoundaryTolRel = 1e-9;

ScenarioPair scenario_pair_of(Scenario scenario);

// Null point for scenarios I/IV. Absent when eta is below the in-pile
// threshold (the closed-form location would fall below the tip).
std::optional<double> combined_null_same_sign(const PileSystem& system, double eta);

// Null point for scenarios II/III. Absent when the location would fall
// above the head.
std::optional<double> combined_null_opposite_sign(const PileSystem& system, double eta);

EtaThresholds existence_thresholds(const PileSystem& system, ScenarioPair pair);

// Global argmax of |combined stress| over [0, L] for the fully floating
// variant. Interior stress extrema sit exactly at displacement zeros
// (sigma' = E psi^2 u), so candidates are the displacement zero plus the
// two ends.
MaxStress locate_max_stress_magnitude(const PileSystem& system, const LoadCase& load);

NullPointReport build_null_point_report(const PileSystem& system, const LoadCase& load);

struct SweepRecord {
    double eta = 0.0;
    std::optional<double> combined_null;
    MaxStress max_stress;
    LoadCase load;
};

struct SweepResult {
    ScenarioPair pair = ScenarioPair::SameSign;
    std::vector<SweepRecord> records;  // ordered by eta ascending
};

// Evaluates the null-point curve for one scenario pair. Every load case
// must belong to the pair; records come back ordered by eta.
SweepResult sweep_null_points(const PileSystem& system, ScenarioPair pair,
                              const std::vector<LoadCase>& cases);

}  // namespace pile
