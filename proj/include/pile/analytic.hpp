#pragma once

#include <vector>

#include "pile/core_model.hpp"

// Closed-form displacement, strain and stress fields for a single energy
// pile without head restraint, split into thermal, mechanical and combined
// contributions. Two variants: the general semi-floating solution (finite
// tip spring k_b) and its fully floating specialization (k_b = 0, thermal
// null point at mid-length).

namespace pile {

enum class Variant { SemiFloating, FullyFloating };

struct FieldComponents {
    double thermal = 0.0;
    double mechanical = 0.0;
    double combined = 0.0;
};

struct PointFields {
    FieldComponents displacement;  // [m]
    FieldComponents strain;        // [-]
    FieldComponents stress;        // [Pa]
};

struct ResponseProfile {
    std::vector<double> x;  // [m], ascending, x[0] = 0, x.back() = L
    std::vector<FieldComponents> displacement;
    std::vector<FieldComponents> strain;
    std::vector<FieldComponents> stress;
    Variant variant = Variant::FullyFloating;
    LoadCase load;
};

// Location x_0 of zero thermal displacement, measured up from the tip.
// Always in (0, L/2]; equals L/2 exactly when k_b = 0.
double thermal_null_point(const PileSystem& system);

PointFields semi_floating_fields(double x, const PileSystem& system, const LoadCase& load);

PointFields fully_floating_fields(double x, const PileSystem& system, const LoadCase& load);

PointFields evaluate_fields(double x, const PileSystem& system, const LoadCase& load,
                            Variant variant);

// Uniform grid over [0, L] with endpoints included; n_points >= 2.
ResponseProfile sample_profile(const PileSystem& system, const LoadCase& load,
                               int n_points, Variant variant);

}  // namespace pile
