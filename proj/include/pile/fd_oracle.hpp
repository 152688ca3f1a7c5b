#pragma once

#include <optional>
#include <vector>

#include "pile/analytic.hpp"
#include "pile/core_model.hpp"

// Independent finite-difference solver for the governing boundary value
// problem u'' = psi^2 u with the thermo-elastic Robin conditions
//   E (u'(0) - alpha dT) = k_b u(0)      (tip spring equilibrium)
//   E (u'(L) - alpha dT) = F / A         (applied head traction)
// Second-order interior stencil with ghost-node boundary closure, solved
// by a Thomas sweep. Used to cross-validate the closed forms; it never
// evaluates them while solving.

namespace pile {

struct FdSolution {
    std::vector<double> x;       // uniform grid [m]
    std::vector<double> u;       // displacement [m]
    std::vector<double> strain;  // second-order differenced u'
    std::vector<double> stress;  // E (strain - alpha dT) [Pa]
    double residual_norm = 0.0;  // max interior stencil residual / max|u|
};

FdSolution solve_bvp(const PileSystem& system, const LoadCase& load, int n_nodes);

struct FieldErrors {
    double displacement = 0.0;
    double strain = 0.0;
    double stress = 0.0;
    double max() const;
};

// Max node-wise deviation from the closed form, each field normalized by
// its own max magnitude over the grid.
FieldErrors compare_to_closed_form(const FdSolution& solution, const PileSystem& system,
                                   const LoadCase& load, Variant variant);

struct ConvergenceRecord {
    int n_nodes = 0;
    double max_error = 0.0;  // displacement error vs closed form
};

struct ConvergenceStudy {
    std::vector<ConvergenceRecord> records;
    // observed_orders[i] = order estimated from records i and i+1.
    std::vector<double> observed_orders;
};

ConvergenceStudy convergence_study(const PileSystem& system, const LoadCase& load,
                                   const std::vector<int>& n_list, Variant variant);

// Interpolated zero crossing of the solved displacement. Absent when the
// displacement does not change sign; throws NumericError on multiple
// crossings (impossible for this ODE, so it would signal a bug).
std::optional<double> find_displacement_zero(const FdSolution& solution);

}  // namespace pile
