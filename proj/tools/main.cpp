#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pile/io/commands.hpp"

// Command line front end: solve / nullpoint / sweep / oracle-check over a
// declarative spec file with explicit units.

namespace {

void add_common_options(CLI::App* cmd, pile::io::CommandOptions& options,
                        std::vector<std::string>& formats, std::string& depth_from) {
    cmd->add_option("--spec", options.spec_path, "path to the run spec file")
        ->required();
    cmd->add_option("--out", options.out_dir, "output directory (default: .)");
    cmd->add_option("--grid", options.grid, "number of grid points / nodes");
    cmd->add_option("--depth-from", depth_from,
                    "report coordinates from 'tip' (default) or 'head'")
        ->check(CLI::IsMember({"tip", "head"}));
    cmd->add_option("--format", formats, "output formats (csv, json, svg); repeatable")
        ->check(CLI::IsMember({"csv", "json", "svg"}));
}

void apply_common(pile::io::CommandOptions& options, const std::vector<std::string>& formats,
                  const std::string& depth_from) {
    options.depth_from = depth_from == "head" ? pile::io::DepthFrom::Head
                                              : pile::io::DepthFrom::Tip;
    if (!formats.empty()) {
        options.csv = options.json = options.svg = false;
        for (const std::string& f : formats) {
            if (f == "csv") options.csv = true;
            if (f == "json") options.json = true;
            if (f == "svg") options.svg = true;
        }
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Energy pile thermo-mechanical response calculator"};
    app.require_subcommand(1);

    struct SubState {
        pile::io::CommandOptions options;
        std::vector<std::string> formats;
        std::string depth_from = "tip";
    };
    std::map<std::string, SubState> state;

    CLI::App* solve = app.add_subcommand(
        "solve", "profile solve: CSV/JSON/SVG per load case");
    add_common_options(solve, state["solve"].options, state["solve"].formats,
                       state["solve"].depth_from);

    CLI::App* nullpoint = app.add_subcommand(
        "nullpoint", "null point and max stress report per load case");
    add_common_options(nullpoint, state["nullpoint"].options, state["nullpoint"].formats,
                       state["nullpoint"].depth_from);

    CLI::App* sweep = app.add_subcommand(
        "sweep", "null point location curves over eta");
    add_common_options(sweep, state["sweep"].options, state["sweep"].formats,
                       state["sweep"].depth_from);

    CLI::App* oracle = app.add_subcommand(
        "oracle-check", "finite-difference cross-validation of the closed forms");
    add_common_options(oracle, state["oracle-check"].options, state["oracle-check"].formats,
                       state["oracle-check"].depth_from);
    oracle
        ->add_option("--corrupt-shaft", state["oracle-check"].options.corrupt_shaft_factor,
                     "test hook: scale the closed-form shaft stiffness")
        ->group("");  // hidden

    CLI11_PARSE(app, argc, argv);

    for (auto& [name, st] : state) {
        apply_common(st.options, st.formats, st.depth_from);
    }
    if (solve->parsed()) return pile::io::cmd_solve(state["solve"].options);
    if (nullpoint->parsed()) return pile::io::cmd_nullpoint(state["nullpoint"].options);
    if (sweep->parsed()) return pile::io::cmd_sweep(state["sweep"].options);
    if (oracle->parsed()) return pile::io::cmd_oracle_check(state["oracle-check"].options);
    return 1;
}
