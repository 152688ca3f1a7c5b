#include "pile/io/runspec.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace pile::io {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

[[noreturn]] void fail(const std::string& source, int line, const std::string& msg) {
    throw SpecParseError(source + ":" + std::to_string(line) + ": " + msg);
}

double parse_number(const std::string& text, const std::string& source, int line) {
    std::string t = trim(text);
    if (!t.empty() && t.front() == '+') t.erase(0, 1);  // from_chars rejects '+'
    double v = 0.0;
    const char* begin = t.data();
    const char* end = t.data() + t.size();
    const auto res = std::from_chars(begin, end, v);
    if (res.ec != std::errc{} || res.ptr != end) {
        fail(source, line, "expected a number, got '" + t + "'");
    }
    return v;
}

Quantity parse_quantity(const std::string& text, Dimension expected,
                        const std::string& source, int line) {
    const std::string t = trim(text);
    const auto space = t.find_last_of(" \t");
    if (space == std::string::npos) {
        fail(source, line, "missing unit token in '" + t + "'");
    }
    const std::string unit = trim(t.substr(space + 1));
    const double value = parse_number(t.substr(0, space), source, line);
    if (!is_known_unit(unit)) {
        fail(source, line, "unknown unit token '" + unit + "'");
    }
    if (unit_dimension(unit) != expected) {
        fail(source, line, "unit '" + unit + "' is not a " +
                               dimension_name(expected) + " unit");
    }
    return make_quantity(value, unit);
}

std::vector<double> parse_number_list(const std::string& text, const std::string& source,
                                      int line) {
    std::vector<double> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        values.push_back(parse_number(item, source, line));
    }
    if (values.empty()) fail(source, line, "empty list");
    return values;
}

struct SweepRange {
    std::optional<double> min, max;
    std::optional<int> count;
    std::string spacing = "log";
};

}  // namespace

RunSpec parse_run_spec(std::istream& in, const std::string& source) {
    RunSpec spec;
    bool have_length = false, have_diameter = false, have_modulus = false,
         have_expansion = false, have_shaft = false;

    std::string section;
    LoadBlock* load = nullptr;
    SweepBlock* sweep = nullptr;
    SweepRange range;
    std::string line_text;
    int line = 0;

    auto finish_sweep = [&](SweepBlock& blk) {
        if (blk.eta_values.empty()) {
            if (!range.min || !range.max || !range.count) {
                fail(source, blk.line, "sweep needs eta_list or eta_min/eta_max/eta_count");
            }
            const int n = *range.count;
            if (n < 1) fail(source, blk.line, "eta_count must be at least 1");
            if (!(*range.min > 0.0)) fail(source, blk.line, "eta_min must be positive");
            if (n > 1 && !(*range.max > *range.min)) {
                fail(source, blk.line, "eta_max must exceed eta_min");
            }
            for (int i = 0; i < n; ++i) {
                const double f = (n == 1) ? 0.0 : static_cast<double>(i) / (n - 1);
                double eta;
                if (range.spacing == "log") {
                    eta = *range.min * std::pow(*range.max / *range.min, f);
                } else if (range.spacing == "linear") {
                    eta = *range.min + f * (*range.max - *range.min);
                } else {
                    fail(source, blk.line, "eta_spacing must be linear or log");
                }
                blk.eta_values.push_back(eta);
            }
        }
        for (double e : blk.eta_values) {
            if (!(e > 0.0)) fail(source, blk.line, "eta values must be positive");
        }
        for (size_t i = 0; i + 1 < blk.eta_values.size(); ++i) {
            if (!(blk.eta_values[i] < blk.eta_values[i + 1])) {
                fail(source, blk.line, "eta values must be strictly increasing");
            }
        }
        if (blk.scenario_pair != "same-sign" && blk.scenario_pair != "opposite-sign") {
            fail(source, blk.line, "scenario_pair must be same-sign or opposite-sign");
        }
        if (blk.force.has_value() == blk.delta_T.has_value()) {
            fail(source, blk.line, "sweep needs exactly one anchor: force or delta_T");
        }
        range = SweepRange{};
    };

    while (std::getline(in, line_text)) {
        ++line;
        const auto hash = line_text.find('#');
        if (hash != std::string::npos) line_text.erase(hash);
        const std::string text = trim(line_text);
        if (text.empty()) continue;

        if (text.front() == '[') {
            if (text.back() != ']') fail(source, line, "malformed section header");
            if (sweep) {
                finish_sweep(*sweep);
                sweep = nullptr;
            }
            load = nullptr;
            section = text.substr(1, text.size() - 2);
            if (section == "load") {
                spec.loads.emplace_back();
                spec.loads.back().line = line;
                load = &spec.loads.back();
            } else if (section == "sweep") {
                spec.sweeps.emplace_back();
                spec.sweeps.back().line = line;
                sweep = &spec.sweeps.back();
            } else if (section != "pile" && section != "output") {
                fail(source, line, "unknown section [" + section + "]");
            }
            continue;
        }

        const auto eq = text.find('=');
        if (eq == std::string::npos) fail(source, line, "expected key = value");
        const std::string key = trim(text.substr(0, eq));
        const std::string value = trim(text.substr(eq + 1));

        if (section == "pile") {
            if (key == "length") {
                spec.length = parse_quantity(value, Dimension::Length, source, line);
                have_length = true;
            } else if (key == "diameter") {
                spec.diameter = parse_quantity(value, Dimension::Length, source, line);
                have_diameter = true;
            } else if (key == "elastic_modulus") {
                spec.elastic_modulus = parse_quantity(value, Dimension::Modulus, source, line);
                have_modulus = true;
            } else if (key == "thermal_expansion") {
                spec.thermal_expansion =
                    parse_quantity(value, Dimension::Expansion, source, line);
                have_expansion = true;
            } else if (key == "shaft_stiffness") {
                spec.shaft_stiffness =
                    parse_quantity(value, Dimension::StiffnessPerLength, source, line);
                have_shaft = true;
            } else if (key == "tip_stiffness") {
                spec.tip_stiffness =
                    parse_quantity(value, Dimension::StiffnessPerLength, source, line);
            } else if (key == "model") {
                if (value != "semi-floating" && value != "fully-floating") {
                    fail(source, line, "model must be semi-floating or fully-floating");
                }
                spec.model = value;
            } else {
                fail(source, line, "unknown key '" + key + "' in [pile]");
            }
        } else if (section == "load") {
            if (key == "force") {
                load->force = parse_quantity(value, Dimension::Force, source, line);
            } else if (key == "delta_T") {
                load->delta_T = parse_quantity(value, Dimension::Temperature, source, line);
            } else if (key == "scenario") {
                if (value != "I" && value != "II" && value != "III" && value != "IV") {
                    fail(source, line, "scenario must be I, II, III or IV");
                }
                load->scenario = value;
            } else if (key == "eta") {
                load->eta = parse_number(value, source, line);
            } else {
                fail(source, line, "unknown key '" + key + "' in [load]");
            }
        } else if (section == "sweep") {
            if (key == "scenario_pair") {
                sweep->scenario_pair = value;
            } else if (key == "eta_list") {
                sweep->eta_values = parse_number_list(value, source, line);
            } else if (key == "eta_min") {
                range.min = parse_number(value, source, line);
            } else if (key == "eta_max") {
                range.max = parse_number(value, source, line);
            } else if (key == "eta_count") {
                range.count = static_cast<int>(parse_number(value, source, line));
            } else if (key == "eta_spacing") {
                range.spacing = value;
            } else if (key == "force") {
                sweep->force = parse_quantity(value, Dimension::Force, source, line);
            } else if (key == "delta_T") {
                sweep->delta_T = parse_quantity(value, Dimension::Temperature, source, line);
            } else {
                fail(source, line, "unknown key '" + key + "' in [sweep]");
            }
        } else if (section == "output") {
            if (key == "grid") {
                spec.grid = static_cast<int>(parse_number(value, source, line));
                if (spec.grid < 2) fail(source, line, "grid must be at least 2");
            } else {
                fail(source, line, "unknown key '" + key + "' in [output]");
            }
        } else {
            fail(source, line, "key outside of any section");
        }
    }
    if (sweep) finish_sweep(*sweep);

    if (!have_length || !have_diameter || !have_modulus || !have_expansion || !have_shaft) {
        throw SpecParseError(source + ": [pile] must define length, diameter, "
                                      "elastic_modulus, thermal_expansion and shaft_stiffness");
    }
    if (spec.loads.empty() && spec.sweeps.empty()) {
        throw SpecParseError(source + ": at least one [load] or [sweep] block is required");
    }
    for (const LoadBlock& blk : spec.loads) {
        const bool direct = blk.force.has_value() || blk.delta_T.has_value();
        if (blk.scenario) {
            if (!blk.eta) fail(source, blk.line, "[load] with scenario needs eta");
            if (blk.force.has_value() == blk.delta_T.has_value()) {
                fail(source, blk.line,
                     "[load] with scenario needs exactly one anchor: force or delta_T");
            }
        } else if (!direct) {
            fail(source, blk.line, "[load] needs force and/or delta_T, or scenario + eta");
        }
    }
    return spec;
}

RunSpec load_run_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpecParseError("cannot open spec file '" + path + "'");
    return parse_run_spec(in, path);
}

PileSystem system_from(const RunSpec& spec) {
    const double kb = spec.tip_stiffness ? spec.tip_stiffness->si : 0.0;
    return build_pile_system(make_pile_geometry(spec.length.si, spec.diameter.si),
                             make_pile_material(spec.elastic_modulus.si,
                                                spec.thermal_expansion.si),
                             make_soil_springs(spec.shaft_stiffness.si, kb));
}

Variant variant_from(const RunSpec& spec) {
    if (spec.model) {
        return *spec.model == "semi-floating" ? Variant::SemiFloating
                                              : Variant::FullyFloating;
    }
    const double kb = spec.tip_stiffness ? spec.tip_stiffness->si : 0.0;
    return kb > 0.0 ? Variant::SemiFloating : Variant::FullyFloating;
}

namespace {

// Signs of (F, dT) per scenario tag.
std::pair<double, double> scenario_signs(const std::string& scenario) {
    if (scenario == "I") return {-1.0, -1.0};
    if (scenario == "II") return {-1.0, 1.0};
    if (scenario == "III") return {1.0, -1.0};
    return {1.0, 1.0};  // IV
}

LoadCase case_from_eta(const PileSystem& system, double f_sign, double t_sign, double eta,
                       const std::optional<Quantity>& force_anchor,
                       const std::optional<Quantity>& temp_anchor) {
    if (!(eta > 0.0)) throw SpecParseError("eta must be positive");
    if (force_anchor) {
        const double f_mag = std::abs(force_anchor->si);
        if (f_mag == 0.0) throw SpecParseError("force anchor must be nonzero");
        const double dteq = equivalent_thermal_load(f_mag, system);
        return make_load_case(f_sign * f_mag, t_sign * eta * dteq, system);
    }
    const double t_mag = std::abs(temp_anchor->si);
    if (t_mag == 0.0) throw SpecParseError("delta_T anchor must be nonzero");
    const double f_mag = system.geometry.cross_section * system.material.elastic_modulus *
                         system.material.thermal_expansion * t_mag / eta;
    return make_load_case(f_sign * f_mag, t_sign * t_mag, system);
}

}  // namespace

LoadCase resolve_load(const LoadBlock& block, const PileSystem& system) {
    if (block.scenario) {
        const auto [f_sign, t_sign] = scenario_signs(*block.scenario);
        return case_from_eta(system, f_sign, t_sign, *block.eta, block.force, block.delta_T);
    }
    const double F = block.force ? block.force->si : 0.0;
    const double dT = block.delta_T ? block.delta_T->si : 0.0;
    return make_load_case(F, dT, system);
}

ScenarioPair sweep_pair(const SweepBlock& block) {
    return block.scenario_pair == "same-sign" ? ScenarioPair::SameSign
                                              : ScenarioPair::OppositeSign;
}

std::vector<LoadCase> sweep_cases(const SweepBlock& block, const PileSystem& system) {
    const bool same_sign = sweep_pair(block) == ScenarioPair::SameSign;
    // Anchor sign decides the scenario within the pair.
    double f_sign, t_sign;
    if (block.force) {
        f_sign = block.force->si < 0.0 ? -1.0 : 1.0;
        t_sign = same_sign ? f_sign : -f_sign;
    } else {
        t_sign = block.delta_T->si < 0.0 ? -1.0 : 1.0;
        f_sign = same_sign ? t_sign : -t_sign;
    }
    std::vector<LoadCase> cases;
    cases.reserve(block.eta_values.size());
    for (double eta : block.eta_values) {
        cases.push_back(
            case_from_eta(system, f_sign, t_sign, eta, block.force, block.delta_T));
    }
    return cases;
}

}  // namespace pile::io
