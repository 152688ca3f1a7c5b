#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>

#include "pile/analytic.hpp"
#include "pile/io/runspec.hpp"
#include "pile/io/svg_plot.hpp"
#include "pile/io/table.hpp"
#include "pile/io/units.hpp"
#include "pile/nullpoint.hpp"

using namespace pile;
using namespace pile::io;

namespace {

const char* kReferenceSpec = R"(# reference pile
[pile]
length           = 26 m
diameter         = 1 m
elastic_modulus  = 29.2 GPa
thermal_expansion = 1e-5 1/degC
shaft_stiffness  = 16.7 MPa/m

[load]
force   = -0.5 MN
delta_T = -10 degC
)";

RunSpec parse(const std::string& text) {
    std::istringstream in(text);
    return parse_run_spec(in, "test.spec");
}

std::string parse_error(const std::string& text) {
    try {
        parse(text);
    } catch (const SpecParseError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("unit table covers the supported tokens") {
    for (const char* token : {"m", "mm", "MPa/m", "Pa/m", "GPa", "Pa", "MN", "kN", "N",
                              "degC", "1/degC"}) {
        CAPTURE(token);
        CHECK(is_known_unit(token));
    }
    CHECK_FALSE(is_known_unit("furlong"));
    CHECK(unit_factor("MPa/m") == 1e6);
    CHECK(unit_factor("GPa") == 1e9);
    CHECK(unit_factor("kN") == 1e3);
    CHECK(unit_factor("mm") == 1e-3);
    CHECK(unit_dimension("MN") == Dimension::Force);
    CHECK(unit_dimension("MPa/m") == Dimension::StiffnessPerLength);
    CHECK(unit_dimension("1/degC") == Dimension::Expansion);
    CHECK_THROWS_AS(unit_factor("furlong"), std::invalid_argument);
}

TEST_CASE("format_double round-trips and is locale-free") {
    CHECK(format_double(16.7) == "16.7");
    CHECK(format_double(0.0) == "0");
    CHECK(format_double(-636619.772) == "-636619.772");
    const double v = 1.1548695189981597e-3;
    CHECK(std::stod(format_double(v)) == v);
}

TEST_CASE("reference spec parses with values echoed exactly as written") {
    const RunSpec spec = parse(kReferenceSpec);
    CHECK(spec.length.value == 26.0);
    CHECK(spec.length.unit == "m");
    CHECK(spec.diameter.value == 1.0);
    CHECK(spec.elastic_modulus.value == 29.2);
    CHECK(spec.elastic_modulus.unit == "GPa");
    CHECK(spec.thermal_expansion.value == 1e-5);
    CHECK(spec.thermal_expansion.unit == "1/degC");
    CHECK(spec.shaft_stiffness.value == 16.7);
    CHECK(spec.shaft_stiffness.unit == "MPa/m");
    CHECK(spec.shaft_stiffness.si == 16.7e6);
    CHECK(spec.elastic_modulus.si == 29.2e9);
    CHECK_FALSE(spec.tip_stiffness.has_value());
    REQUIRE(spec.loads.size() == 1);
    CHECK(spec.loads[0].force->si == -0.5e6);
    CHECK(spec.loads[0].delta_T->si == -10.0);
    CHECK(spec.grid == 1001);

    const PileSystem system = system_from(spec);
    CHECK(system.psi == doctest::Approx(0.04782960623794338).epsilon(1e-14));
    CHECK(variant_from(spec) == Variant::FullyFloating);
}

TEST_CASE("parse errors carry source and line number") {
    SUBCASE("unknown unit token") {
        const std::string msg = parse_error(
            "[pile]\nlength = 26 cubits\n");
        CHECK(msg.find("test.spec:2") != std::string::npos);
        CHECK(msg.find("unknown unit token 'cubits'") != std::string::npos);
    }
    SUBCASE("wrong dimension") {
        const std::string msg = parse_error(
            "[pile]\nlength = 26 GPa\n");
        CHECK(msg.find("test.spec:2") != std::string::npos);
        CHECK(msg.find("not a length unit") != std::string::npos);
    }
    SUBCASE("missing unit") {
        const std::string msg = parse_error("[pile]\nlength = 26\n");
        CHECK(msg.find("test.spec:2") != std::string::npos);
        CHECK(msg.find("missing unit") != std::string::npos);
    }
    SUBCASE("key outside any section") {
        const std::string msg = parse_error("length = 26 m\n");
        CHECK(msg.find("test.spec:1") != std::string::npos);
    }
    SUBCASE("unknown key") {
        const std::string msg = parse_error("[pile]\nwidth = 1 m\n");
        CHECK(msg.find("unknown key 'width'") != std::string::npos);
    }
    SUBCASE("missing required pile fields") {
        const std::string msg =
            parse_error("[pile]\nlength = 26 m\n[load]\ndelta_T = 1 degC\n");
        CHECK(msg.find("must define") != std::string::npos);
    }
    SUBCASE("no load or sweep") {
        const std::string text = std::string(kReferenceSpec);
        const std::string trimmed = text.substr(0, text.find("[load]"));
        CHECK(parse_error(trimmed).find("at least one") != std::string::npos);
    }
}

TEST_CASE("load block validation") {
    const std::string head(kReferenceSpec);
    SUBCASE("scenario without eta") {
        const std::string msg =
            parse_error(head + "[load]\nscenario = I\nforce = -1 MN\n");
        CHECK(msg.find("needs eta") != std::string::npos);
    }
    SUBCASE("scenario with both anchors") {
        const std::string msg = parse_error(
            head + "[load]\nscenario = I\neta = 2\nforce = -1 MN\ndelta_T = -10 degC\n");
        CHECK(msg.find("exactly one anchor") != std::string::npos);
    }
    SUBCASE("empty load block") {
        const std::string msg = parse_error(head + "[load]\n");
        CHECK(msg.find("force and/or delta_T") != std::string::npos);
    }
    SUBCASE("bad scenario tag") {
        const std::string msg = parse_error(head + "[load]\nscenario = V\neta = 2\n");
        CHECK(msg.find("scenario must be") != std::string::npos);
    }
}

TEST_CASE("sweep block validation and range expansion") {
    const std::string head(kReferenceSpec);
    SUBCASE("log range expansion") {
        const RunSpec spec = parse(head +
                                   "[sweep]\nscenario_pair = same-sign\n"
                                   "eta_min = 1\neta_max = 100\neta_count = 3\n"
                                   "eta_spacing = log\ndelta_T = -10 degC\n");
        REQUIRE(spec.sweeps.size() == 1);
        REQUIRE(spec.sweeps[0].eta_values.size() == 3);
        CHECK(spec.sweeps[0].eta_values[0] == doctest::Approx(1.0));
        CHECK(spec.sweeps[0].eta_values[1] == doctest::Approx(10.0));
        CHECK(spec.sweeps[0].eta_values[2] == doctest::Approx(100.0));
    }
    SUBCASE("explicit eta list") {
        const RunSpec spec = parse(head +
                                   "[sweep]\nscenario_pair = opposite-sign\n"
                                   "eta_list = 2.5, 3, 10\nforce = -1 MN\n");
        CHECK(spec.sweeps[0].eta_values == std::vector<double>{2.5, 3.0, 10.0});
    }
    SUBCASE("non-increasing eta list rejected") {
        const std::string msg = parse_error(head +
                                            "[sweep]\nscenario_pair = same-sign\n"
                                            "eta_list = 3, 2\ndelta_T = -10 degC\n");
        CHECK(msg.find("strictly increasing") != std::string::npos);
    }
    SUBCASE("both anchors rejected") {
        const std::string msg = parse_error(head +
                                            "[sweep]\nscenario_pair = same-sign\n"
                                            "eta_list = 2\nforce = -1 MN\n"
                                            "delta_T = -10 degC\n");
        CHECK(msg.find("exactly one anchor") != std::string::npos);
    }
    SUBCASE("bad pair tag") {
        const std::string msg = parse_error(head +
                                            "[sweep]\nscenario_pair = mixed\n"
                                            "eta_list = 2\nforce = -1 MN\n");
        CHECK(msg.find("scenario_pair must be") != std::string::npos);
    }
}

TEST_CASE("scenario + eta load resolution fixes signs and magnitudes") {
    const RunSpec spec = parse(kReferenceSpec);
    const PileSystem system = system_from(spec);

    LoadBlock block;
    block.scenario = "I";
    block.eta = 4.58;
    block.force = make_quantity(-0.5, "MN");
    const LoadCase lc = resolve_load(block, system);
    CHECK(lc.axial_force == -0.5e6);
    CHECK(lc.delta_T < 0.0);
    CHECK(lc.scenario == Scenario::I);
    CHECK(*lc.eta == doctest::Approx(4.58).epsilon(1e-12));

    // Anchor magnitude is what matters; scenario dictates the signs.
    block.scenario = "III";
    const LoadCase lc3 = resolve_load(block, system);
    CHECK(lc3.axial_force == 0.5e6);
    CHECK(lc3.delta_T < 0.0);
    CHECK(lc3.scenario == Scenario::III);

    LoadBlock temp_anchor;
    temp_anchor.scenario = "II";
    temp_anchor.eta = 2.0;
    temp_anchor.delta_T = make_quantity(10, "degC");
    const LoadCase lc2 = resolve_load(temp_anchor, system);
    CHECK(lc2.delta_T == 10.0);
    CHECK(lc2.axial_force < 0.0);
    CHECK(*lc2.eta == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("sweep cases follow the anchor sign within the pair") {
    const RunSpec spec = parse(std::string(kReferenceSpec) +
                               "[sweep]\nscenario_pair = same-sign\n"
                               "eta_list = 2, 4\ndelta_T = -10 degC\n"
                               "[sweep]\nscenario_pair = opposite-sign\n"
                               "eta_list = 3, 5\nforce = -1 MN\n");
    const PileSystem system = system_from(spec);

    const auto same = sweep_cases(spec.sweeps[0], system);
    REQUIRE(same.size() == 2);
    CHECK(same[0].scenario == Scenario::I);  // cooling anchor -> compression
    CHECK(same[0].delta_T == -10.0);
    CHECK(*same[1].eta == doctest::Approx(4.0).epsilon(1e-12));

    const auto opp = sweep_cases(spec.sweeps[1], system);
    CHECK(opp[0].scenario == Scenario::II);  // compression anchor -> heating
    CHECK(opp[0].axial_force == -1e6);
    CHECK(opp[0].delta_T > 0.0);
}

TEST_CASE("profile CSV is deterministic with LF endings and fixed header") {
    const RunSpec spec = parse(kReferenceSpec);
    const PileSystem system = system_from(spec);
    const LoadCase lc = resolve_load(spec.loads[0], system);
    const ResponseProfile profile = sample_profile(system, lc, 101, variant_from(spec));

    std::ostringstream a, b;
    write_profile_csv(a, profile, system.geometry.length, DepthFrom::Tip);
    write_profile_csv(b, profile, system.geometry.length, DepthFrom::Tip);
    const std::string csv = a.str();
    CHECK(csv == b.str());
    CHECK(csv.find('\r') == std::string::npos);
    CHECK(csv.rfind("x_m,u_thermal,u_mech,u_combined,eps_thermal,eps_mech,eps_combined,"
                    "sig_thermal_Pa,sig_mech_Pa,sig_combined_Pa\n", 0) == 0);
    // 101 rows + header
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 102);

    std::ostringstream c;
    write_profile_csv(c, profile, system.geometry.length, DepthFrom::Head);
    const std::string head_csv = c.str();
    CHECK(head_csv.rfind("depth_m,", 0) == 0);
    // first data row starts at depth 0 (the pile head)
    const auto first_row = head_csv.find('\n') + 1;
    CHECK(head_csv.compare(first_row, 2, "0,") == 0);
}

TEST_CASE("mechanical-only profile has all-zero thermal columns") {
    const RunSpec spec = parse(std::string(kReferenceSpec) + "[load]\nforce = -1 MN\n");
    const PileSystem system = system_from(spec);
    const LoadCase lc = resolve_load(spec.loads[1], system);
    CHECK(lc.scenario == Scenario::MechanicalOnly);
    const ResponseProfile profile = sample_profile(system, lc, 51, Variant::FullyFloating);
    for (size_t i = 0; i < profile.x.size(); ++i) {
        CHECK(profile.displacement[i].thermal == 0.0);
        CHECK(profile.strain[i].thermal == 0.0);
        CHECK(profile.stress[i].thermal == 0.0);
    }
}

TEST_CASE("sweep CSV encodes absent null points as empty field plus flag 0") {
    const RunSpec spec = parse(kReferenceSpec);
    const PileSystem system = system_from(spec);
    SweepBlock block;
    block.scenario_pair = "opposite-sign";
    block.eta_values = {1.5, 10.0};  // below and above the in-pile threshold
    block.delta_T = make_quantity(10, "degC");
    const auto cases = sweep_cases(block, system);
    const SweepResult result =
        sweep_null_points(system, ScenarioPair::OppositeSign, cases);

    std::ostringstream out;
    write_sweep_csv(out, result, system.geometry.length, DepthFrom::Tip);
    const std::string csv = out.str();
    CHECK(csv.rfind("eta,x0bar_m,exists_flag,max_sigma_Pa,max_sigma_location_m\n", 0) == 0);
    CHECK(csv.find("1.5,,0,") != std::string::npos);
    // last row: eta ~10 exists, so the x0bar field is populated and flag is 1
    const auto last_row_start = csv.rfind('\n', csv.size() - 2) + 1;
    const std::string last_row = csv.substr(last_row_start);
    CHECK(last_row.find(",,") == std::string::npos);
    CHECK(last_row.find(",1,") != std::string::npos);
}

TEST_CASE("single-eta sweep matches the null point report") {
    const RunSpec spec = parse(kReferenceSpec);
    const PileSystem system = system_from(spec);
    SweepBlock block;
    block.scenario_pair = "same-sign";
    block.eta_values = {4.586725274241098};
    block.delta_T = make_quantity(-10, "degC");
    const auto cases = sweep_cases(block, system);
    const SweepResult result = sweep_null_points(system, ScenarioPair::SameSign, cases);
    REQUIRE(result.records.size() == 1);

    const NullPointReport report = build_null_point_report(system, cases[0]);
    REQUIRE(result.records[0].combined_null.has_value());
    REQUIRE(report.combined_null.has_value());
    CHECK(*result.records[0].combined_null == *report.combined_null);
    CHECK(result.records[0].max_stress.location == report.max_stress.location);
    CHECK(result.records[0].max_stress.value == report.max_stress.value);
}

TEST_CASE("report table names the scenario and both thresholds") {
    const RunSpec spec = parse(kReferenceSpec);
    const PileSystem system = system_from(spec);
    const LoadCase lc = make_load_case(-0.5e6, 10.0, system);  // scenario II
    const NullPointReport report = build_null_point_report(system, lc);
    const std::string table = report_table(report, system);
    CHECK(table.find("II") != std::string::npos);
    CHECK(table.find("eta threshold (printed)") != std::string::npos);
    CHECK(table.find("eta threshold (in-pile)") != std::string::npos);
    CHECK(table.find("max |stress|") != std::string::npos);

    const LoadCase absent = make_load_case(-0.5e6, 1.0, system);  // below threshold
    const std::string absent_table =
        report_table(build_null_point_report(system, absent), system);
    CHECK(absent_table.find("ABSENT") != std::string::npos);
}

TEST_CASE("SVG figures are self-contained with labeled axes") {
    Panel panel;
    panel.title = "stress";
    panel.x_label = "x (m)";
    panel.y_label = "sigma (MPa)";
    panel.series.push_back({"combined", "#d62728", {{0.0, -0.6}, {13.0, -0.5}, {26.0, 0.0}}});
    const std::string svg = render_figure({panel}, "profile");

    CHECK(svg.rfind("<svg xmlns=\"http://www.w3.org/2000/svg\"", 0) == 0);
    CHECK(svg.find("x (m)") != std::string::npos);
    CHECK(svg.find("sigma (MPa)") != std::string::npos);
    CHECK(svg.find("combined") != std::string::npos);
    CHECK(svg.find("<polyline") != std::string::npos);
    // no external assets: the only URL is the xmlns declaration
    CHECK(svg.find("http", svg.find("svg\"") + 4) == std::string::npos);
    CHECK(svg.find("href") == std::string::npos);
    CHECK(svg.find("url(") == std::string::npos);
    // deterministic
    CHECK(render_figure({panel}, "profile") == svg);
}
