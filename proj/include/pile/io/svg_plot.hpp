#pragma once

#include <string>
#include <utility>
#include <vector>

// Minimal self-contained SVG line plots: polylines, axes with tick labels,
// a legend, no external assets. Output is deterministic.

namespace pile::io {

struct Series {
    std::string label;
    std::string color;
    std::vector<std::pair<double, double>> points;
};

struct Panel {
    std::string title;
    std::string x_label;  // include units, e.g. "x (m)"
    std::string y_label;
    std::vector<Series> series;
};

// Panels are laid out side by side in one figure.
std::string render_figure(const std::vector<Panel>& panels, const std::string& title);

}  // namespace pile::io
