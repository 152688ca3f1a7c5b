#include "pile/analytic.hpp"

#include <cmath>
#include <stdexcept>

#include "pile/hyperbolic.hpp"

namespace pile {

namespace {

void require_in_pile(double x, double length) {
    if (!(x >= 0.0 && x <= length)) {
        throw std::domain_error("x outside [0, L]");
    }
}

}  // namespace

double thermal_null_point(const PileSystem& system) {
    const double psi = system.psi;
    const double t = psi * system.geometry.length;
    const double c = system.springs.tip_stiffness / (system.material.elastic_modulus * psi);
    if (c == 0.0) {
        // The atanh argument collapses to tanh(t/2): the null point sits at mid-length.
        return 0.5 * system.geometry.length;
    }
    // x0 = atanh[(cosh t - 1)/(sinh t + c)] / psi, rewritten as a log ratio
    // that stays finite for t up to ~700 and arbitrarily stiff tip springs.
    const double lnum =
        (t < 700.0) ? std::log(std::expm1(t) + c) : t + std::log1p((c - 1.0) * std::exp(-t));
    const double lden = std::log(c - std::expm1(-t));
    return 0.5 * (lnum - lden) / psi;
}

PointFields semi_floating_fields(double x, const PileSystem& system, const LoadCase& load) {
    require_in_pile(x, system.geometry.length);
    const double psi = system.psi;
    const double L = system.geometry.length;
    const double E = system.material.elastic_modulus;
    const double A = system.geometry.cross_section;
    const double alpha = system.material.thermal_expansion;
    const double kb = system.springs.tip_stiffness;
    const double t = psi * L;

    const double x0 = thermal_null_point(system);
    const double a = psi * (x - x0);
    const double b = psi * (L - x0);
    const double rs = sinh_over_cosh(a, b);
    const double rc = cosh_over_cosh(a, b);

    // Mechanical ratios with the common exp factor pulled out so large
    // psi*L cannot overflow.
    const double epsi = E * psi;
    const double e2x = std::exp(-2.0 * psi * x);
    const double e2L = std::exp(-2.0 * t);
    const double denom = epsi * (1.0 - e2L) + kb * (1.0 + e2L);
    const double scale = std::exp(psi * (x - L));
    const double mu = scale * (epsi * (1.0 + e2x) + kb * (1.0 - e2x)) / denom;
    const double ms = scale * (epsi * (1.0 - e2x) + kb * (1.0 + e2x)) / denom;

    PointFields f;
    f.displacement.thermal = alpha * load.delta_T * rs / psi;
    f.displacement.mechanical = load.axial_force * mu / (A * E * psi);
    f.strain.thermal = alpha * load.delta_T * rc;
    f.strain.mechanical = load.axial_force * ms / (A * E);
    f.stress.thermal = E * alpha * load.delta_T * (rc - 1.0);
    f.stress.mechanical = load.axial_force * ms / A;
    f.displacement.combined = f.displacement.thermal + f.displacement.mechanical;
    f.strain.combined = f.strain.thermal + f.strain.mechanical;
    f.stress.combined = f.stress.thermal + f.stress.mechanical;
    return f;
}

PointFields fully_floating_fields(double x, const PileSystem& system, const LoadCase& load) {
    require_in_pile(x, system.geometry.length);
    const double psi = system.psi;
    const double L = system.geometry.length;
    const double E = system.material.elastic_modulus;
    const double A = system.geometry.cross_section;
    const double alpha = system.material.thermal_expansion;
    const double t = psi * L;

    const double a = psi * (x - 0.5 * L);
    const double rs = sinh_over_cosh(a, 0.5 * t);
    const double rc = cosh_over_cosh(a, 0.5 * t);
    const double mc = cosh_over_sinh(psi * x, t);
    const double msh = sinh_over_sinh(psi * x, t);

    PointFields f;
    f.displacement.thermal = alpha * load.delta_T * rs / psi;
    f.displacement.mechanical = load.axial_force * mc / (A * E * psi);
    f.strain.thermal = alpha * load.delta_T * rc;
    f.strain.mechanical = load.axial_force * msh / (A * E);
    f.stress.thermal = E * alpha * load.delta_T * (rc - 1.0);
    f.stress.mechanical = load.axial_force * msh / A;
    f.displacement.combined = f.displacement.thermal + f.displacement.mechanical;
    f.strain.combined = f.strain.thermal + f.strain.mechanical;
    f.stress.combined = f.stress.thermal + f.stress.mechanical;
    return f;
}

PointFields evaluate_fields(double x, const PileSystem& system, const LoadCase& load,
                            Variant variant) {
    return variant == Variant::FullyFloating ? fully_floating_fields(x, system, load)
                                             : semi_floating_fields(x, system, load);
}

ResponseProfile sample_profile(const PileSystem& system, const LoadCase& load,
                               int n_points, Variant variant) {
    if (n_points < 2) {
        throw std::invalid_argument("n_points must be at least 2");
    }
    const double L = system.geometry.length;
    ResponseProfile profile;
    profile.variant = variant;
    profile.load = load;
    profile.x.reserve(static_cast<size_t>(n_points));
    profile.displacement.reserve(static_cast<size_t>(n_points));
    profile.strain.reserve(static_cast<size_t>(n_points));
    profile.stress.reserve(static_cast<size_t>(n_points));
    for (int i = 0; i < n_points; ++i) {
        const double x = (i == n_points - 1) ? L : L * static_cast<double>(i) / (n_points - 1);
        const PointFields f = evaluate_fields(x, system, load, variant);
        profile.x.push_back(x);
        profile.displacement.push_back(f.displacement);
        profile.strain.push_back(f.strain);
        profile.stress.push_back(f.stress);
    }
    return profile;
}

}  // namespace pile
