#include "pile/nullpoint.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "pile/hyperbolic.hpp"

namespace pile {

namespace {

double combined_displacement(double x, const PileSystem& system, const LoadCase& load) {
    return fully_floating_fields(x, system, load).displacement.combined;
}

// Bisection refinement of a displacement sign change. The bracket is
// assumed to straddle exactly one zero.
double refine_zero(double lo, double hi, const PileSystem& system, const LoadCase& load) {
    double flo = combined_displacement(lo, system, load);
    if (flo == 0.0) return lo;
    const double tol = 1e-13 * system.geometry.length;
    for (int it = 0; it < 200 && (hi - lo) > tol; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = combined_displacement(mid, system, load);
        if (fm == 0.0) return mid;
        if ((flo < 0.0) == (fm < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

void require_eta(double eta) {
    if (!(eta > 0.0) || !std::isfinite(eta)) {
        throw std::invalid_argument("eta must be positive and finite");
    }
}

}  // namespace

ScenarioPair scenario_pair_of(Scenario scenario) {
    switch (scenario) {
        case Scenario::I:
        case Scenario::IV:
            return ScenarioPair::SameSign;
        case Scenario::II:
        case Scenario::III:
            return ScenarioPair::OppositeSign;
        default:
            throw std::invalid_argument("scenario has no sign pair");
    }
}

EtaThresholds existence_thresholds(const PileSystem& system, ScenarioPair pair) {
    const double t = system.psi * system.geometry.length;
    EtaThresholds th;
    if (pair == ScenarioPair::SameSign) {
        // The published bound coincides with the in-pile condition x0bar >= 0.
        th.in_pile = inv_sinh(t) / std::tanh(0.5 * t);
        th.printed = th.in_pile;
    } else {
        // In-pile condition x0bar <= L; 1/(sinh t (tanh t - tanh(t/2)))
        // simplified to avoid cancellation at large t.
        th.in_pile = 1.0 / (std::tanh(t) * std::tanh(0.5 * t));
        th.printed = inv_sinh(t) / one_minus_tanh(0.5 * t);
    }
    return th;
}

std::optional<double> combined_null_same_sign(const PileSystem& system, double eta) {
    require_eta(eta);
    const double t = system.psi * system.geometry.length;
    const double threshold = existence_thresholds(system, ScenarioPair::SameSign).in_pile;
    if (eta < threshold) return std::nullopt;
    // arg = tanh(t/2) - 1/(eta sinh t), written so it is exactly zero when
    // eta equals the threshold.
    const double arg = std::tanh(0.5 * t) * (1.0 - threshold / eta);
    return checked_atanh(arg) / system.psi;
}

std::optional<double> combined_null_opposite_sign(const PileSystem& system, double eta) {
    require_eta(eta);
    const double t = system.psi * system.geometry.length;
    const double threshold = existence_thresholds(system, ScenarioPair::OppositeSign).in_pile;
    if (eta < threshold) return std::nullopt;
    const double arg = std::tanh(0.5 * t) + inv_sinh(t) / eta;
    return checked_atanh(arg) / system.psi;
}

MaxStress locate_max_stress_magnitude(const PileSystem& system, const LoadCase& load) {
    const double L = system.geometry.length;

    // Candidate extremum locations: the two ends plus any interior
    // displacement zero. u'' = psi^2 u admits at most one interior zero,
    // located by a sign-change scan and bisection.
    std::vector<double> candidates = {0.0, L};
    const int n_scan = 4096;
    double prev_x = 0.0;
    double prev_u = combined_displacement(0.0, system, load);
    for (int i = 1; i <= n_scan; ++i) {
        const double x = (i == n_scan) ? L : L * static_cast<double>(i) / n_scan;
        const double u = combined_displacement(x, system, load);
        if (prev_u == 0.0 && prev_x > 0.0) {
            candidates.push_back(prev_x);
        } else if (prev_u != 0.0 && u != 0.0 && (prev_u < 0.0) != (u < 0.0)) {
            candidates.push_back(refine_zero(prev_x, x, system, load));
        }
        prev_x = x;
        prev_u = u;
    }

    MaxStress best;
    bool first = true;
    for (double x : candidates) {
        const double sigma = fully_floating_fields(x, system, load).stress.combined;
        if (first || std::abs(sigma) > std::abs(best.value)) {
            best.location = x;
            best.value = sigma;
            first = false;
        }
    }
    return best;
}

NullPointReport build_null_point_report(const PileSystem& system, const LoadCase& load) {
    NullPointReport report;
    report.thermal_null = thermal_null_point(system);
    report.scenario = load.scenario;
    report.eta = load.eta;
    report.max_stress = locate_max_stress_magnitude(system, load);

    const double L = system.geometry.length;
    const double tol = kBoundaryTolRel * L;

    switch (load.scenario) {
        case Scenario::NullLoad:
        case Scenario::MechanicalOnly:
            report.existence = Existence::Absent;
            return report;
        case Scenario::ThermalOnly:
            // eta -> infinity limit: the combined null point is the thermal one.
            report.combined_null = report.thermal_null;
            report.existence = Existence::ExistsInterior;
            return report;
        default:
            break;
    }

    const ScenarioPair pair = scenario_pair_of(load.scenario);
    report.thresholds = existence_thresholds(system, pair);
    const double eta = *load.eta;
    const std::optional<double> xbar = (pair == ScenarioPair::SameSign)
                                           ? combined_null_same_sign(system, eta)
                                           : combined_null_opposite_sign(system, eta);
    report.combined_null = xbar;
    if (!xbar) {
        report.existence = Existence::Absent;
    } else if (*xbar <= tol) {
        report.existence = Existence::AtTip;
    } else if (std::abs(*xbar - L) <= tol) {
        report.existence = Existence::AtHead;
    } else {
        report.existence = Existence::ExistsInterior;
    }
    return report;
}

SweepResult sweep_null_points(const PileSystem& system, ScenarioPair pair,
                              const std::vector<LoadCase>& cases) {
    SweepResult result;
    result.pair = pair;
    result.records.reserve(cases.size());
    for (const LoadCase& lc : cases) {
        if (!lc.eta) {
            throw std::invalid_argument("sweep load case has no eta (degenerate load)");
        }
        if (scenario_pair_of(lc.scenario) != pair) {
            throw std::invalid_argument("sweep load case does not belong to the scenario pair");
        }
        SweepRecord rec;
        rec.eta = *lc.eta;
        rec.load = lc;
        rec.combined_null = (pair == ScenarioPair::SameSign)
                                ? combined_null_same_sign(system, rec.eta)
                                : combined_null_opposite_sign(system, rec.eta);
        rec.max_stress = locate_max_stress_magnitude(system, lc);
        result.records.push_back(rec);
    }
    for (size_t i = 0; i + 1 < result.records.size(); ++i) {
        if (!(result.records[i].eta < result.records[i + 1].eta)) {
            throw std::invalid_argument("sweep eta values must be strictly increasing");
        }
    }
    return result;
}

}  // namespace pile
