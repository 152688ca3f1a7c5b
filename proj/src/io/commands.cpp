#include "pile/io/commands.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "pile/fd_oracle.hpp"
#include "pile/io/runspec.hpp"
#include "pile/io/svg_plot.hpp"
#include "pile/io/units.hpp"

namespace pile::io {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

void write_text_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    out << content;
}

json quantity_json(const Quantity& q) {
    return json{{"value", q.value}, {"unit", q.unit}, {"si", q.si}};
}

json load_case_json(const LoadCase& lc) {
    json j{{"axial_force_N", lc.axial_force},
           {"delta_T_degC", lc.delta_T},
           {"delta_T_eq_magnitude_degC", lc.delta_T_eq_magnitude},
           {"scenario", scenario_name(lc.scenario)}};
    j["eta"] = lc.eta ? json(*lc.eta) : json(nullptr);
    return j;
}

json profile_json(const ResponseProfile& profile, const PileSystem& system) {
    json cols;
    auto push = [&](const char* name, auto getter) {
        json arr = json::array();
        for (size_t i = 0; i < profile.x.size(); ++i) arr.push_back(getter(i));
        cols[name] = std::move(arr);
    };
    push("x_m", [&](size_t i) { return profile.x[i]; });
    push("u_thermal", [&](size_t i) { return profile.displacement[i].thermal; });
    push("u_mech", [&](size_t i) { return profile.displacement[i].mechanical; });
    push("u_combined", [&](size_t i) { return profile.displacement[i].combined; });
    push("eps_thermal", [&](size_t i) { return profile.strain[i].thermal; });
    push("eps_mech", [&](size_t i) { return profile.strain[i].mechanical; });
    push("eps_combined", [&](size_t i) { return profile.strain[i].combined; });
    push("sig_thermal_Pa", [&](size_t i) { return profile.stress[i].thermal; });
    push("sig_mech_Pa", [&](size_t i) { return profile.stress[i].mechanical; });
    push("sig_combined_Pa", [&](size_t i) { return profile.stress[i].combined; });
    return json{{"pile_length_m", system.geometry.length},
                {"psi_per_m", system.psi},
                {"variant", profile.variant == Variant::FullyFloating ? "fully-floating"
                                                                      : "semi-floating"},
                {"load", load_case_json(profile.load)},
                {"columns", cols}};
}

json report_json(const NullPointReport& report) {
    json j{{"scenario", scenario_name(report.scenario)},
           {"thermal_null_m", report.thermal_null},
           {"existence", existence_name(report.existence)},
           {"max_stress_location_m", report.max_stress.location},
           {"max_stress_Pa", report.max_stress.value}};
    j["combined_null_m"] = report.combined_null ? json(*report.combined_null) : json(nullptr);
    j["eta"] = report.eta ? json(*report.eta) : json(nullptr);
    if (report.thresholds) {
        j["eta_threshold_printed"] = report.thresholds->printed;
        j["eta_threshold_in_pile"] = report.thresholds->in_pile;
    } else {
        j["eta_threshold_printed"] = nullptr;
        j["eta_threshold_in_pile"] = nullptr;
    }
    return j;
}

std::string profile_svg(const ResponseProfile& profile, const PileSystem& system,
                        DepthFrom depth_from) {
    const double L = system.geometry.length;
    const std::string coord_label =
        depth_from == DepthFrom::Tip ? "x from tip (m)" : "depth from head (m)";
    auto coord = [&](double x) { return depth_from == DepthFrom::Tip ? x : L - x; };

    auto make_panel = [&](const std::string& title, const std::string& y_label,
                          auto field, double scale) {
        Panel panel;
        panel.title = title;
        panel.x_label = coord_label;
        panel.y_label = y_label;
        const char* names[3] = {"thermal", "mechanical", "combined"};
        const char* colors[3] = {"#1f77b4", "#d62728", "#000000"};
        for (int c = 0; c < 3; ++c) {
            Series s;
            s.label = names[c];
            s.color = colors[c];
            for (size_t i = 0; i < profile.x.size(); ++i) {
                const FieldComponents& f = field(i);
                const double v = c == 0 ? f.thermal : (c == 1 ? f.mechanical : f.combined);
                s.points.emplace_back(coord(profile.x[i]), v * scale);
            }
            panel.series.push_back(std::move(s));
        }
        return panel;
    };

    std::vector<Panel> panels;
    panels.push_back(make_panel(
        "Displacement", "u (mm)",
        [&](size_t i) -> const FieldComponents& { return profile.displacement[i]; }, 1e3));
    panels.push_back(make_panel(
        "Strain", "strain (microstrain)",
        [&](size_t i) -> const FieldComponents& { return profile.strain[i]; }, 1e6));
    panels.push_back(make_panel(
        "Stress", "stress (MPa)",
        [&](size_t i) -> const FieldComponents& { return profile.stress[i]; }, 1e-6));

    std::ostringstream title;
    title << "F = " << format_double(profile.load.axial_force / 1e6)
          << " MN, dT = " << format_double(profile.load.delta_T) << " degC ("
          << scenario_name(profile.load.scenario) << ")";
    return render_figure(panels, title.str());
}

int run_guarded(const CommandOptions& options, int (*body)(const CommandOptions&)) {
    try {
        return body(options);
    } catch (const SpecParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const NumericError& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

int grid_of(const CommandOptions& options, const RunSpec& spec) {
    return options.grid.value_or(spec.grid);
}

int solve_body(const CommandOptions& options) {
    const RunSpec spec = load_run_spec(options.spec_path);
    const PileSystem system = system_from(spec);
    const Variant variant = variant_from(spec);
    const fs::path out_dir(options.out_dir);
    fs::create_directories(out_dir);

    for (size_t i = 0; i < spec.loads.size(); ++i) {
        const LoadCase lc = resolve_load(spec.loads[i], system);
        const ResponseProfile profile =
            sample_profile(system, lc, grid_of(options, spec), variant);
        const std::string stem = "solve_case" + std::to_string(i + 1);
        if (options.csv) {
            std::ostringstream csv;
            write_profile_csv(csv, profile, system.geometry.length, options.depth_from);
            write_text_file(out_dir / (stem + ".csv"), csv.str());
        }
        if (options.json) {
            write_text_file(out_dir / (stem + ".json"),
                            profile_json(profile, system).dump(2) + "\n");
        }
        if (options.svg) {
            write_text_file(out_dir / (stem + ".svg"),
                            profile_svg(profile, system, options.depth_from));
        }
        std::cout << stem << ": scenario " << scenario_name(lc.scenario) << ", "
                  << profile.x.size() << " points\n";
    }
    return 0;
}

int nullpoint_body(const CommandOptions& options) {
    const RunSpec spec = load_run_spec(options.spec_path);
    const PileSystem system = system_from(spec);
    const fs::path out_dir(options.out_dir);
    fs::create_directories(out_dir);

    for (size_t i = 0; i < spec.loads.size(); ++i) {
        const LoadCase lc = resolve_load(spec.loads[i], system);
        const NullPointReport report = build_null_point_report(system, lc);
        std::cout << report_table(report, system);
        if (options.json) {
            write_text_file(out_dir / ("nullpoint_case" + std::to_string(i + 1) + ".json"),
                            report_json(report).dump(2) + "\n");
        }
    }
    return 0;
}

int sweep_body(const CommandOptions& options) {
    const RunSpec spec = load_run_spec(options.spec_path);
    const PileSystem system = system_from(spec);
    const fs::path out_dir(options.out_dir);
    fs::create_directories(out_dir);
    if (spec.sweeps.empty()) {
        throw SpecParseError(options.spec_path + ": sweep command needs a [sweep] block");
    }

    Panel curve_panel;
    curve_panel.title = "Combined null point location";
    curve_panel.x_label = "log10(eta)";
    curve_panel.y_label =
        options.depth_from == DepthFrom::Tip ? "x0bar from tip (m)" : "x0bar depth (m)";
    const char* colors[2] = {"#1f77b4", "#d62728"};

    for (size_t k = 0; k < spec.sweeps.size(); ++k) {
        const SweepBlock& block = spec.sweeps[k];
        const ScenarioPair pair = sweep_pair(block);
        const SweepResult result =
            sweep_null_points(system, pair, sweep_cases(block, system));
        const std::string stem =
            "sweep" + std::to_string(k + 1) + "_" + scenario_pair_name(pair);
        if (options.csv) {
            std::ostringstream csv;
            write_sweep_csv(csv, result, system.geometry.length, options.depth_from);
            write_text_file(out_dir / (stem + ".csv"), csv.str());
        }
        if (options.json) {
            json arr = json::array();
            for (const SweepRecord& rec : result.records) {
                json row{{"eta", rec.eta},
                         {"exists", rec.combined_null.has_value()},
                         {"max_sigma_Pa", rec.max_stress.value},
                         {"max_sigma_location_m", rec.max_stress.location}};
                row["x0bar_m"] = rec.combined_null ? json(*rec.combined_null) : json(nullptr);
                arr.push_back(row);
            }
            write_text_file(out_dir / (stem + ".json"),
                            json{{"scenario_pair", scenario_pair_name(pair)},
                                 {"records", arr}}
                                    .dump(2) +
                                "\n");
        }

        Series s;
        s.label = scenario_pair_name(pair);
        s.color = colors[k % 2];
        for (const SweepRecord& rec : result.records) {
            if (!rec.combined_null) continue;
            const double y = options.depth_from == DepthFrom::Tip
                                 ? *rec.combined_null
                                 : system.geometry.length - *rec.combined_null;
            s.points.emplace_back(std::log10(rec.eta), y);
        }
        curve_panel.series.push_back(std::move(s));
        std::cout << stem << ": " << result.records.size() << " eta values\n";
    }

    if (options.svg) {
        write_text_file(fs::path(options.out_dir) / "sweep.svg",
                        render_figure({curve_panel}, "Null point vs thermal load ratio"));
    }
    return 0;
}

struct CheckOutcome {
    bool ok = true;
    void record(const std::string& name, bool pass, const std::string& detail) {
        std::cout << (pass ? "PASS " : "FAIL ") << name << ": " << detail << "\n";
        ok = ok && pass;
    }
};

int oracle_check_body(const CommandOptions& options) {
    const RunSpec spec = load_run_spec(options.spec_path);
    const PileSystem fd_system = system_from(spec);
    // The closed-form side may be deliberately corrupted (test hook).
    const PileSystem analytic_system = build_pile_system(
        fd_system.geometry, fd_system.material,
        make_soil_springs(fd_system.springs.shaft_stiffness * options.corrupt_shaft_factor,
                          fd_system.springs.tip_stiffness));
    const Variant variant = variant_from(spec);
    const int n = options.grid.value_or(10000);
    CheckOutcome outcome;

    // 1. field agreement for every load case in the spec
    std::vector<LoadCase> cases;
    for (const LoadBlock& blk : spec.loads) cases.push_back(resolve_load(blk, fd_system));
    if (cases.empty()) cases.push_back(make_load_case(0.0, 10.0, fd_system));
    double worst = 0.0;
    for (const LoadCase& lc : cases) {
        const FdSolution sol = solve_bvp(fd_system, lc, n);
        worst = std::max(worst,
                         compare_to_closed_form(sol, analytic_system, lc, variant).max());
    }
    outcome.record("field-agreement", worst < 1e-4,
                   "max relative field error " + format_double(worst) + " at n = " +
                       std::to_string(n));

    // 2. randomized parameter sets, fully floating and semi-floating
    std::mt19937 rng(20240817);
    std::uniform_real_distribution<double> psl(std::log(0.1), std::log(20.0));
    std::uniform_real_distribution<double> fdist(0.1e6, 2e6);
    std::uniform_real_distribution<double> tdist(1.0, 20.0);
    std::bernoulli_distribution coin(0.5);
    const double kb_factors[3] = {0.0, 1.0, 100.0};
    double worst_random = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const double psi = std::exp(psl(rng)) / fd_system.geometry.length;
        const double ks = psi * psi * fd_system.material.elastic_modulus *
                          fd_system.geometry.cross_section / fd_system.geometry.perimeter;
        const PileSystem rs = build_pile_system(
            fd_system.geometry, fd_system.material,
            make_soil_springs(ks, kb_factors[trial % 3] * ks));
        const LoadCase lc = make_load_case((coin(rng) ? -1.0 : 1.0) * fdist(rng),
                                           (coin(rng) ? -1.0 : 1.0) * tdist(rng), rs);
        const FdSolution sol = solve_bvp(rs, lc, 10000);
        worst_random = std::max(
            worst_random, compare_to_closed_form(sol, rs, lc, Variant::SemiFloating).max());
    }
    outcome.record("randomized-agreement", worst_random < 1e-4,
                   "max relative field error " + format_double(worst_random) +
                       " over 20 parameter sets");

    // 3. convergence order
    const LoadCase conv_case = make_load_case(0.0, 10.0, fd_system);
    const ConvergenceStudy study = convergence_study(analytic_system, conv_case,
                                                     {250, 500, 1000, 2000}, variant);
    bool order_ok = !study.observed_orders.empty();
    std::string orders;
    for (double p : study.observed_orders) {
        order_ok = order_ok && p >= 1.8 && p <= 2.2;
        if (!orders.empty()) orders += ", ";
        orders += format_double(p);
    }
    outcome.record("convergence-order", order_ok, "observed orders: " + orders);

    // 4. null point agreement
    const double h = fd_system.geometry.length / (n - 1);
    const FdSolution thermal_sol = solve_bvp(fd_system, conv_case, n);
    const auto fd_zero = find_displacement_zero(thermal_sol);
    const double x0 = thermal_null_point(analytic_system);
    const bool zero_ok = fd_zero && std::abs(*fd_zero - x0) < h;
    outcome.record("null-point-agreement", zero_ok,
                   fd_zero ? "thermal null: fd " + format_double(*fd_zero) +
                                 " m vs closed form " + format_double(x0) + " m"
                           : "fd solution has no zero crossing");

    return outcome.ok ? 0 : 2;
}

}  // namespace

int cmd_solve(const CommandOptions& options) { return run_guarded(options, solve_body); }
int cmd_nullpoint(const CommandOptions& options) {
    return run_guarded(options, nullpoint_body);
}
int cmd_sweep(const CommandOptions& options) { return run_guarded(options, sweep_body); }
int cmd_oracle_check(const CommandOptions& options) {
    return run_guarded(options, oracle_check_body);
}

}  // namespace pile::io
