#include "pile/fd_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pile/errors.hpp"

namespace pile {

double FieldErrors::max() const {
    return std::max({displacement, strain, stress});
}

FdSolution solve_bvp(const PileSystem& system, const LoadCase& load, int n_nodes) {
    if (n_nodes < 3) {
        throw std::invalid_argument("n_nodes must be at least 3");
    }
    const int n = n_nodes;
    const double L = system.geometry.length;
    const double E = system.material.elastic_modulus;
    const double A = system.geometry.cross_section;
    const double alpha = system.material.thermal_expansion;
    const double kb = system.springs.tip_stiffness;
    const double psi = system.psi;
    const double h = L / (n - 1);
    const double hp2 = h * h * psi * psi;
    const double thermal_slope = alpha * load.delta_T;
    const double head_slope = load.axial_force / (A * E) + thermal_slope;

    // Tridiagonal system. Ghost nodes eliminate the Robin conditions at
    // second order:
    //   row 0:    -(2 + hp2 + 2h kb/E) u0 + 2 u1        = 2h alpha dT
    //   interior:  u_{i-1} - (2 + hp2) u_i + u_{i+1}    = 0
    //   row n-1:   2 u_{n-2} - (2 + hp2) u_{n-1}        = -2h (F/(AE) + alpha dT)
    std::vector<double> lower(n, 0.0), diag(n, 0.0), upper(n, 0.0), rhs(n, 0.0);
    diag[0] = -(2.0 + hp2 + 2.0 * h * kb / E);
    upper[0] = 2.0;
    rhs[0] = 2.0 * h * thermal_slope;
    for (int i = 1; i < n - 1; ++i) {
        lower[i] = 1.0;
        diag[i] = -(2.0 + hp2);
        upper[i] = 1.0;
    }
    lower[n - 1] = 2.0;
    diag[n - 1] = -(2.0 + hp2);
    rhs[n - 1] = -2.0 * h * head_slope;

    // Thomas sweep; the system is diagonally dominant, no pivoting needed.
    std::vector<double> cp(n, 0.0), dp(n, 0.0);
    if (diag[0] == 0.0) throw NumericError("singular tridiagonal system");
    cp[0] = upper[0] / diag[0];
    dp[0] = rhs[0] / diag[0];
    for (int i = 1; i < n; ++i) {
        const double denom = diag[i] - lower[i] * cp[i - 1];
        if (denom == 0.0) throw NumericError("singular tridiagonal system");
        cp[i] = upper[i] / denom;
        dp[i] = (rhs[i] - lower[i] * dp[i - 1]) / denom;
    }

    FdSolution sol;
    sol.u.assign(n, 0.0);
    sol.u[n - 1] = dp[n - 1];
    for (int i = n - 2; i >= 0; --i) {
        sol.u[i] = dp[i] - cp[i] * sol.u[i + 1];
    }

    sol.x.resize(n);
    for (int i = 0; i < n; ++i) {
        sol.x[i] = (i == n - 1) ? L : h * i;
    }

    // Strain by second-order differencing: central in the interior,
    // one-sided three-point at the ends.
    sol.strain.assign(n, 0.0);
    sol.strain[0] = (-3.0 * sol.u[0] + 4.0 * sol.u[1] - sol.u[2]) / (2.0 * h);
    for (int i = 1; i < n - 1; ++i) {
        sol.strain[i] = (sol.u[i + 1] - sol.u[i - 1]) / (2.0 * h);
    }
    sol.strain[n - 1] = (3.0 * sol.u[n - 1] - 4.0 * sol.u[n - 2] + sol.u[n - 3]) / (2.0 * h);

    sol.stress.assign(n, 0.0);
    for (int i = 0; i < n; ++i) {
        sol.stress[i] = E * (sol.strain[i] - thermal_slope);
    }

    double umax = 0.0;
    for (double v : sol.u) umax = std::max(umax, std::abs(v));
    double res = 0.0;
    for (int i = 1; i < n - 1; ++i) {
        res = std::max(res, std::abs(sol.u[i - 1] - (2.0 + hp2) * sol.u[i] + sol.u[i + 1]));
    }
    sol.residual_norm = (umax > 0.0) ? res / umax : res;
    return sol;
}

FieldErrors compare_to_closed_form(const FdSolution& solution, const PileSystem& system,
                                   const LoadCase& load, Variant variant) {
    FieldErrors err;
    double umax = 0.0, emax = 0.0, smax = 0.0;
    double udiff = 0.0, ediff = 0.0, sdiff = 0.0;
    for (size_t i = 0; i < solution.x.size(); ++i) {
        const PointFields f = evaluate_fields(solution.x[i], system, load, variant);
        umax = std::max(umax, std::abs(f.displacement.combined));
        emax = std::max(emax, std::abs(f.strain.combined));
        smax = std::max(smax, std::abs(f.stress.combined));
        udiff = std::max(udiff, std::abs(solution.u[i] - f.displacement.combined));
        ediff = std::max(ediff, std::abs(solution.strain[i] - f.strain.combined));
        sdiff = std::max(sdiff, std::abs(solution.stress[i] - f.stress.combined));
    }
    err.displacement = (umax > 0.0) ? udiff / umax : udiff;
    err.strain = (emax > 0.0) ? ediff / emax : ediff;
    err.stress = (smax > 0.0) ? sdiff / smax : sdiff;
    return err;
}

ConvergenceStudy convergence_study(const PileSystem& system, const LoadCase& load,
                                   const std::vector<int>& n_list, Variant variant) {
    ConvergenceStudy study;
    for (int n : n_list) {
        const FdSolution sol = solve_bvp(system, load, n);
        study.records.push_back({n, compare_to_closed_form(sol, system, load, variant).displacement});
    }
    for (size_t i = 0; i + 1 < study.records.size(); ++i) {
        const auto& a = study.records[i];
        const auto& b = study.records[i + 1];
        const double ratio = a.max_error / b.max_error;
        const double refinement =
            static_cast<double>(b.n_nodes - 1) / static_cast<double>(a.n_nodes - 1);
        study.observed_orders.push_back(std::log(ratio) / std::log(refinement));
    }
    return study;
}

std::optional<double> find_displacement_zero(const FdSolution& solution) {
    std::optional<double> zero;
    int crossings = 0;
    const auto& u = solution.u;
    const auto& x = solution.x;
    for (size_t i = 0; i + 1 < u.size(); ++i) {
        if (u[i] == 0.0) {
            if (i == 0) continue;  // boundary node, not an interior crossing
            ++crossings;
            zero = x[i];
        } else if (u[i + 1] != 0.0 && (u[i] < 0.0) != (u[i + 1] < 0.0)) {
            ++crossings;
            zero = x[i] + (x[i + 1] - x[i]) * (-u[i]) / (u[i + 1] - u[i]);
        }
    }
    if (crossings > 1) {
        throw NumericError("unexpected nonmonotone displacement: multiple zero crossings");
    }
    return zero;
}

}  // namespace pile
