#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "pile/core_model.hpp"
#include "pile/fd_oracle.hpp"

using namespace pile;

namespace {

PileSystem reference_system(double tip_stiffness = 0.0) {
    return build_pile_system(make_pile_geometry(26.0, 1.0),
                             make_pile_material(29.2e9, 1e-5),
                             make_soil_springs(16.7e6, tip_stiffness));
}

PileSystem system_with_psi_l(double target, double kb_factor) {
    const double L = 26.0, D = 1.0, E = 29.2e9;
    const double psi = target / L;
    const double ks = psi * psi * E * (D / 4.0);
    return build_pile_system(make_pile_geometry(L, D), make_pile_material(E, 1e-5),
                             make_soil_springs(ks, kb_factor * ks));
}

}  // namespace

TEST_CASE("thermal-only fully floating solve matches the closed form") {
    const PileSystem s = reference_system(0.0);
    const LoadCase lc = make_load_case(0.0, 10.0, s);
    const FdSolution sol = solve_bvp(s, lc, 10000);
    const FieldErrors err = compare_to_closed_form(sol, s, lc, Variant::FullyFloating);
    CHECK(err.displacement < 1e-6);
    CHECK(err.max() < 1e-4);
    CHECK(sol.residual_norm < 1e-12);
}

TEST_CASE("force-only solve recovers the head traction") {
    const PileSystem s = reference_system(5e6);
    const LoadCase lc = make_load_case(-1e6, 0.0, s);
    const FdSolution sol = solve_bvp(s, lc, 10000);
    const double FA = lc.axial_force / s.geometry.cross_section;
    CHECK(sol.stress.back() == doctest::Approx(FA).epsilon(1e-4));
    // tip spring equilibrium from the discrete solution
    CHECK(sol.stress.front() ==
          doctest::Approx(s.springs.tip_stiffness * sol.u.front()).epsilon(1e-4));
}

TEST_CASE("zero load gives the zero solution") {
    const PileSystem s = reference_system(1e6);
    const FdSolution sol = solve_bvp(s, make_load_case(0.0, 0.0, s), 501);
    for (double v : sol.u) CHECK(v == 0.0);
    CHECK(sol.residual_norm == 0.0);
}

TEST_CASE("n_nodes below 3 is rejected") {
    const PileSystem s = reference_system();
    CHECK_THROWS_AS((void)solve_bvp(s, make_load_case(0.0, 10.0, s), 2),
                    std::invalid_argument);
}

TEST_CASE("convergence order is two") {
    const PileSystem s = reference_system(0.0);
    const LoadCase lc = make_load_case(0.0, 10.0, s);
    const ConvergenceStudy study =
        convergence_study(s, lc, {250, 500, 1000, 2000}, Variant::FullyFloating);
    REQUIRE(study.observed_orders.size() == 3);
    for (double p : study.observed_orders) {
        CHECK(p >= 1.8);
        CHECK(p <= 2.2);
    }
    for (size_t i = 0; i + 1 < study.records.size(); ++i) {
        CHECK(study.records[i].max_error / study.records[i + 1].max_error >= 3.5);
    }
}

TEST_CASE("self-comparison of the closed form is exact to rounding") {
    const PileSystem s = reference_system(8e6);
    const LoadCase lc = make_load_case(-0.7e6, 9.0, s);
    FdSolution fake;
    const int n = 1001;
    const double L = s.geometry.length;
    for (int i = 0; i < n; ++i) {
        const double x = (i == n - 1) ? L : L * i / (n - 1);
        const PointFields f = semi_floating_fields(x, s, lc);
        fake.x.push_back(x);
        fake.u.push_back(f.displacement.combined);
        fake.strain.push_back(f.strain.combined);
        fake.stress.push_back(f.stress.combined);
    }
    const FieldErrors err = compare_to_closed_form(fake, s, lc, Variant::SemiFloating);
    CHECK(err.max() < 1e-14);
}

TEST_CASE("displacement zero locator") {
    const PileSystem s = reference_system(0.0);
    const int n = 4001;
    const double h = s.geometry.length / (n - 1);

    SUBCASE("thermal-only zero at mid-length") {
        const FdSolution sol = solve_bvp(s, make_load_case(0.0, 10.0, s), n);
        const auto zero = find_displacement_zero(sol);
        REQUIRE(zero.has_value());
        CHECK(std::abs(*zero - 13.0) <= h);
    }

    SUBCASE("scenario I at eta = 4.58 matches the closed-form null point") {
        const double dT = -4.58 * equivalent_thermal_load(-0.5e6, s);
        const FdSolution sol = solve_bvp(s, make_load_case(-0.5e6, dT, s), n);
        const auto zero = find_displacement_zero(sol);
        REQUIRE(zero.has_value());
        CHECK(std::abs(*zero - 9.2343) <= h + 1e-3);
    }

    SUBCASE("scenario I at eta = 1 has no zero") {
        const double dT = -equivalent_thermal_load(-0.5e6, s);
        const FdSolution sol = solve_bvp(s, make_load_case(-0.5e6, dT, s), n);
        CHECK_FALSE(find_displacement_zero(sol).has_value());
    }

    SUBCASE("multiple crossings are flagged as a bug") {
        FdSolution bad;
        bad.x = {0.0, 1.0, 2.0, 3.0, 4.0};
        bad.u = {1.0, -1.0, 1.0, -1.0, 1.0};
        CHECK_THROWS_AS((void)find_displacement_zero(bad), NumericError);
    }
}

TEST_CASE("discrete maximum principle for thermal heating, floating tip") {
    const PileSystem s = reference_system(0.0);
    const FdSolution sol = solve_bvp(s, make_load_case(0.0, 10.0, s), 2001);
    CHECK(sol.u.front() < 0.0);
    CHECK(sol.u.back() > 0.0);
    for (size_t i = 1; i < sol.u.size(); ++i) CHECK(sol.u[i] > sol.u[i - 1]);
}

TEST_CASE("randomized cross-validation against both closed forms") {
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> psl(std::log(0.1), std::log(20.0));
    std::uniform_real_distribution<double> fdist(0.1e6, 2e6);
    std::uniform_real_distribution<double> tdist(1.0, 20.0);
    std::bernoulli_distribution coin(0.5);
    const double kb_factors[3] = {0.0, 1.0, 100.0};

    for (int trial = 0; trial < 20; ++trial) {
        const double target = std::exp(psl(rng));
        const double kb_factor = kb_factors[trial % 3];
        const PileSystem s = system_with_psi_l(target, kb_factor);
        const double F = (coin(rng) ? -1.0 : 1.0) * fdist(rng);
        const double dT = (coin(rng) ? -1.0 : 1.0) * tdist(rng);
        const LoadCase lc = make_load_case(F, dT, s);
        const FdSolution sol = solve_bvp(s, lc, 10000);

        const FieldErrors semi = compare_to_closed_form(sol, s, lc, Variant::SemiFloating);
        CHECK(semi.max() < 1e-4);
        if (kb_factor == 0.0) {
            const FieldErrors full =
                compare_to_closed_form(sol, s, lc, Variant::FullyFloating);
            CHECK(full.max() < 1e-4);
        }
        CHECK(sol.residual_norm < 1e-12);
    }
}
