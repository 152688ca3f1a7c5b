#pragma once

#include <optional>
#include <string>

#include "pile/errors.hpp"

// Physical data model for a single energy pile embedded in a homogeneous
// elastic soil layer. Strict SI throughout: meters, pascals, newtons, degC.
// Sign conventions: x upward from the pile tip, displacement positive
// upward, stress positive in tension, delta_T positive for heating, axial
// force positive in tension.

namespace pile {

struct PileGeometry {
    double length = 0.0;         // L [m]
    double diameter = 0.0;       // D [m]
    double perimeter = 0.0;      // p = pi*D [m]
    double cross_section = 0.0;  // A = pi*D^2/4 [m^2]
};

struct PileMaterial {
    double elastic_modulus = 0.0;    // E [Pa]
    double thermal_expansion = 0.0;  // alpha [1/degC]
};

struct SoilSprings {
    double shaft_stiffness = 0.0;  // k_s [Pa/m], continuous shear spring
    double tip_stiffness = 0.0;    // k_b [Pa/m], normal spring at the tip
};

struct PileSystem {
    PileGeometry geometry;
    PileMaterial material;
    SoilSprings springs;
    double psi = 0.0;  // characteristic inverse length [1/m]
};

enum class Scenario {
    I,    // compression + cooling
    II,   // compression + heating
    III,  // tension + cooling
    IV,   // tension + heating
    ThermalOnly,
    MechanicalOnly,
    NullLoad,
};

struct LoadCase {
    double axial_force = 0.0;           // F [N], tension positive
    double delta_T = 0.0;               // [degC], heating positive
    double delta_T_eq_magnitude = 0.0;  // |F|/(A E alpha) [degC]
    std::optional<double> eta;          // |dT| / dT_eq, defined when F != 0 and dT != 0
    Scenario scenario = Scenario::NullLoad;
};

PileGeometry make_pile_geometry(double length, double diameter);
PileMaterial make_pile_material(double elastic_modulus, double thermal_expansion);
SoilSprings make_soil_springs(double shaft_stiffness, double tip_stiffness);

// Validates all invariants and derives psi = sqrt((p/A) * (k_s/E)).
PileSystem build_pile_system(const PileGeometry& geometry,
                             const PileMaterial& material,
                             const SoilSprings& springs);

// |F|/(A E alpha); the sign per load scenario is the caller's concern.
double equivalent_thermal_load(double axial_force, const PileSystem& system);

// |delta_T| / delta_T_eq. Throws ValidationError for degenerate cases.
double eta_ratio(double delta_T, double axial_force, const PileSystem& system);

Scenario classify_scenario(double axial_force, double delta_T);

const char* scenario_name(Scenario scenario);

LoadCase make_load_case(double axial_force, double delta_T, const PileSystem& system);

}  // namespace pile
