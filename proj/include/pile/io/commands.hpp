#pragma once

#include <optional>
#include <string>

#include "pile/io/table.hpp"

// CLI entry points. Each returns a process exit code:
//   0 success, 1 validation/parse error, 2 numeric or tolerance failure.

namespace pile::io {

struct CommandOptions {
    std::string spec_path;
    std::string out_dir = ".";
    std::optional<int> grid;  // overrides the spec's [output] grid
    DepthFrom depth_from = DepthFrom::Tip;
    bool csv = true;
    bool json = true;
    bool svg = true;
    // Test hook for the oracle check: scales the shaft stiffness of the
    // closed-form side only, so a mismatch is guaranteed to be detected.
    double corrupt_shaft_factor = 1.0;
};

int cmd_solve(const CommandOptions& options);
int cmd_nullpoint(const CommandOptions& options);
int cmd_sweep(const CommandOptions& options);
int cmd_oracle_check(const CommandOptions& options);

}  // namespace pile::io
