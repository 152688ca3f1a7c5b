#pragma once

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "pile/analytic.hpp"
#include "pile/core_model.hpp"
#include "pile/io/units.hpp"
#include "pile/nullpoint.hpp"

// Declarative run specification: a small key = value file with explicit
// unit suffixes, one [pile] block, any number of [load] and [sweep]
// blocks, and an optional [output] block.

namespace pile::io {

class SpecParseError : public std::runtime_error {
public:
    explicit SpecParseError(const std::string& msg) : std::runtime_error(msg) {}
};

struct LoadBlock {
    std::optional<Quantity> force;
    std::optional<Quantity> delta_T;
    std::optional<std::string> scenario;  // alternative: scenario + eta + anchor
    std::optional<double> eta;
    int line = 0;
};

struct SweepBlock {
    std::string scenario_pair;        // "same-sign" | "opposite-sign"
    std::vector<double> eta_values;   // resolved, strictly increasing
    std::optional<Quantity> force;    // anchor (exactly one of force/delta_T)
    std::optional<Quantity> delta_T;
    int line = 0;
};

struct RunSpec {
    Quantity length, diameter, elastic_modulus, thermal_expansion, shaft_stiffness;
    std::optional<Quantity> tip_stiffness;
    std::optional<std::string> model;  // "semi-floating" | "fully-floating"
    std::vector<LoadBlock> loads;
    std::vector<SweepBlock> sweeps;
    int grid = 1001;
};

RunSpec parse_run_spec(std::istream& in, const std::string& source_name);
RunSpec load_run_spec(const std::string& path);

PileSystem system_from(const RunSpec& spec);

// Fully floating when k_b = 0 unless the spec says otherwise.
Variant variant_from(const RunSpec& spec);

LoadCase resolve_load(const LoadBlock& block, const PileSystem& system);

// Load cases for every eta in the sweep, built around the block's anchor.
std::vector<LoadCase> sweep_cases(const SweepBlock& block, const PileSystem& system);

ScenarioPair sweep_pair(const SweepBlock& block);

}  // namespace pile::io
