#include "pile/core_model.hpp"

#include <cmath>
#include <numbers>

namespace pile {

namespace {

void require_positive(double value, const char* field) {
    if (!(value > 0.0) || !std::isfinite(value)) {
        throw ValidationError(std::string(field) + " must be positive and finite");
    }
}

}  // namespace

PileGeometry make_pile_geometry(double length, double diameter) {
    require_positive(length, "length");
    require_positive(diameter, "diameter");
    PileGeometry g;
    g.length = length;
    g.diameter = diameter;
    g.perimeter = std::numbers::pi * diameter;
    g.cross_section = std::numbers::pi * diameter * diameter / 4.0;
    return g;
}

PileMaterial make_pile_material(double elastic_modulus, double thermal_expansion) {
    require_positive(elastic_modulus, "elastic_modulus");
    require_positive(thermal_expansion, "thermal_expansion");
    return PileMaterial{elastic_modulus, thermal_expansion};
}

SoilSprings make_soil_springs(double shaft_stiffness, double tip_stiffness) {
    require_positive(shaft_stiffness, "shaft_stiffness");
    if (tip_stiffness < 0.0 || !std::isfinite(tip_stiffness)) {
        throw ValidationError("tip_stiffness must be non-negative and finite");
    }
    return SoilSprings{shaft_stiffness, tip_stiffness};
}

PileSystem build_pile_system(const PileGeometry& geometry,
                             const PileMaterial& material,
                             const SoilSprings& springs) {
    // Re-validate so a hand-built aggregate cannot bypass the checks.
    PileSystem s;
    s.geometry = make_pile_geometry(geometry.length, geometry.diameter);
    s.material = make_pile_material(material.elastic_modulus, material.thermal_expansion);
    s.springs = make_soil_springs(springs.shaft_stiffness, springs.tip_stiffness);
    s.psi = std::sqrt((s.geometry.perimeter / s.geometry.cross_section) *
                      (s.springs.shaft_stiffness / s.material.elastic_modulus));
    if (!std::isfinite(s.psi) || !std::isfinite(s.psi * s.geometry.length)) {
        throw ValidationError("psi*L is not representable for the given system");
    }
    return s;
}

double equivalent_thermal_load(double axial_force, const PileSystem& system) {
    return std::abs(axial_force) /
           (system.geometry.cross_section * system.material.elastic_modulus *
            system.material.thermal_expansion);
}

double eta_ratio(double delta_T, double axial_force, const PileSystem& system) {
    if (axial_force == 0.0) {
        throw ValidationError("eta undefined: thermal-only case");
    }
    if (delta_T == 0.0) {
        throw ValidationError("eta undefined: mechanical-only case");
    }
    return std::abs(delta_T) / equivalent_thermal_load(axial_force, system);
}

Scenario classify_scenario(double axial_force, double delta_T) {
    if (axial_force == 0.0 && delta_T == 0.0) return Scenario::NullLoad;
    if (axial_force == 0.0) return Scenario::ThermalOnly;
    if (delta_T == 0.0) return Scenario::MechanicalOnly;
    if (axial_force < 0.0) return delta_T < 0.0 ? Scenario::I : Scenario::II;
    return delta_T < 0.0 ? Scenario::III : Scenario::IV;
}

const char* scenario_name(Scenario scenario) {
    switch (scenario) {
        case Scenario::I: return "I";
        case Scenario::II: return "II";
        case Scenario::III: return "III";
        case Scenario::IV: return "IV";
        case Scenario::ThermalOnly: return "THERMAL_ONLY";
        case Scenario::MechanicalOnly: return "MECHANICAL_ONLY";
        case Scenario::NullLoad: return "NULL_LOAD";
    }
    return "?";
}

LoadCase make_load_case(double axial_force, double delta_T, const PileSystem& system) {
    if (!std::isfinite(axial_force)) throw ValidationError("axial_force must be finite");
    if (!std::isfinite(delta_T)) throw ValidationError("delta_T must be finite");
    LoadCase lc;
    lc.axial_force = axial_force;
    lc.delta_T = delta_T;
    lc.delta_T_eq_magnitude = equivalent_thermal_load(axial_force, system);
    lc.scenario = classify_scenario(axial_force, delta_T);
    if (axial_force != 0.0 && delta_T != 0.0) {
        lc.eta = eta_ratio(delta_T, axial_force, system);
    }
    return lc;
}

}  // namespace pile
