#include "pile/io/svg_plot.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "pile/io/units.hpp"

namespace pile::io {

namespace {

constexpr double kPanelWidth = 390.0;
constexpr double kPanelHeight = 380.0;
constexpr double kMarginLeft = 70.0;
constexpr double kMarginRight = 16.0;
constexpr double kMarginTop = 40.0;
constexpr double kMarginBottom = 52.0;

struct Range {
    double lo = 0.0;
    double hi = 1.0;
};

std::string px(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, 2);
    return std::string(buf, res.ptr);
}

Range autoscale(double lo, double hi) {
    if (!(lo <= hi)) {
        lo = 0.0;
        hi = 1.0;
    }
    if (lo == hi) {
        const double pad = (lo == 0.0) ? 1.0 : std::abs(lo) * 0.1;
        return {lo - pad, hi + pad};
    }
    const double pad = 0.05 * (hi - lo);
    return {lo - pad, hi + pad};
}

// Tick step of the form {1, 2, 5} * 10^k giving roughly five intervals.
double nice_step(const Range& r) {
    const double raw = (r.hi - r.lo) / 5.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    const double ratio = raw / mag;
    if (ratio <= 1.5) return mag;
    if (ratio <= 3.5) return 2.0 * mag;
    if (ratio <= 7.5) return 5.0 * mag;
    return 10.0 * mag;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string tick_label(double v) {
    // ticks are nice multiples; snap values that round to zero
    if (std::abs(v) < 1e-12) return "0";
    return format_double(v);
}

void render_panel(std::ostringstream& out, const Panel& panel, double x_off, double y_off) {
    const double plot_w = kPanelWidth - kMarginLeft - kMarginRight;
    const double plot_h = kPanelHeight - kMarginTop - kMarginBottom;
    const double x0 = x_off + kMarginLeft;
    const double y0 = y_off + kMarginTop;

    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (const Series& s : panel.series) {
        for (const auto& [x, y] : s.points) {
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    }
    const Range xr = autoscale(xmin, xmax);
    const Range yr = autoscale(ymin, ymax);

    auto sx = [&](double x) { return x0 + (x - xr.lo) / (xr.hi - xr.lo) * plot_w; };
    auto sy = [&](double y) { return y0 + plot_h - (y - yr.lo) / (yr.hi - yr.lo) * plot_h; };

    out << "<rect x=\"" << px(x0) << "\" y=\"" << px(y0) << "\" width=\"" << px(plot_w)
        << "\" height=\"" << px(plot_h)
        << "\" fill=\"white\" stroke=\"#333\" stroke-width=\"1\"/>\n";

    // ticks and grid lines
    const double xstep = nice_step(xr);
    for (double v = std::ceil(xr.lo / xstep) * xstep; v <= xr.hi + 1e-12 * xstep;
         v += xstep) {
        const double X = sx(v);
        out << "<line x1=\"" << px(X) << "\" y1=\"" << px(y0) << "\" x2=\"" << px(X)
            << "\" y2=\"" << px(y0 + plot_h)
            << "\" stroke=\"#ddd\" stroke-width=\"0.5\"/>\n";
        out << "<line x1=\"" << px(X) << "\" y1=\"" << px(y0 + plot_h) << "\" x2=\""
            << px(X) << "\" y2=\"" << px(y0 + plot_h + 4)
            << "\" stroke=\"#333\" stroke-width=\"1\"/>\n";
        out << "<text x=\"" << px(X) << "\" y=\"" << px(y0 + plot_h + 16)
            << "\" font-size=\"10\" text-anchor=\"middle\" font-family=\"sans-serif\">"
            << tick_label(v) << "</text>\n";
    }
    const double ystep = nice_step(yr);
    for (double v = std::ceil(yr.lo / ystep) * ystep; v <= yr.hi + 1e-12 * ystep;
         v += ystep) {
        const double Y = sy(v);
        out << "<line x1=\"" << px(x0) << "\" y1=\"" << px(Y) << "\" x2=\""
            << px(x0 + plot_w) << "\" y2=\"" << px(Y)
            << "\" stroke=\"#ddd\" stroke-width=\"0.5\"/>\n";
        out << "<line x1=\"" << px(x0 - 4) << "\" y1=\"" << px(Y) << "\" x2=\"" << px(x0)
            << "\" y2=\"" << px(Y) << "\" stroke=\"#333\" stroke-width=\"1\"/>\n";
        out << "<text x=\"" << px(x0 - 6) << "\" y=\"" << px(Y + 3)
            << "\" font-size=\"10\" text-anchor=\"end\" font-family=\"sans-serif\">"
            << tick_label(v) << "</text>\n";
    }

    // series polylines, clipped to the plot box by construction of the scales
    for (const Series& s : panel.series) {
        if (s.points.empty()) continue;
        out << "<polyline fill=\"none\" stroke=\"" << s.color
            << "\" stroke-width=\"1.5\" points=\"";
        for (const auto& [x, y] : s.points) {
            out << px(sx(x)) << ',' << px(sy(y)) << ' ';
        }
        out << "\"/>\n";
    }

    // labels
    out << "<text x=\"" << px(x0 + plot_w / 2) << "\" y=\"" << px(y_off + 18)
        << "\" font-size=\"12\" text-anchor=\"middle\" font-family=\"sans-serif\">"
        << escape(panel.title) << "</text>\n";
    out << "<text x=\"" << px(x0 + plot_w / 2) << "\" y=\""
        << px(y0 + plot_h + kMarginBottom - 12)
        << "\" font-size=\"11\" text-anchor=\"middle\" font-family=\"sans-serif\">"
        << escape(panel.x_label) << "</text>\n";
    out << "<text x=\"" << px(x_off + 16) << "\" y=\"" << px(y0 + plot_h / 2)
        << "\" font-size=\"11\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "transform=\"rotate(-90 "
        << px(x_off + 16) << ' ' << px(y0 + plot_h / 2) << ")\">" << escape(panel.y_label)
        << "</text>\n";

    // legend, top-left inside the plot box
    double ly = y0 + 12.0;
    for (const Series& s : panel.series) {
        out << "<line x1=\"" << px(x0 + 8) << "\" y1=\"" << px(ly - 3) << "\" x2=\""
            << px(x0 + 28) << "\" y2=\"" << px(ly - 3) << "\" stroke=\"" << s.color
            << "\" stroke-width=\"1.5\"/>\n";
        out << "<text x=\"" << px(x0 + 32) << "\" y=\"" << px(ly)
            << "\" font-size=\"10\" font-family=\"sans-serif\">" << escape(s.label)
            << "</text>\n";
        ly += 13.0;
    }
}

}  // namespace

std::string render_figure(const std::vector<Panel>& panels, const std::string& title) {
    const double title_h = title.empty() ? 0.0 : 26.0;
    const double width = kPanelWidth * static_cast<double>(panels.size());
    const double height = kPanelHeight + title_h;

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << px(width)
        << "\" height=\"" << px(height) << "\" viewBox=\"0 0 " << px(width) << ' '
        << px(height) << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (!title.empty()) {
        out << "<text x=\"" << px(width / 2) << "\" y=\"18\" font-size=\"13\" "
               "text-anchor=\"middle\" font-family=\"sans-serif\">"
            << escape(title) << "</text>\n";
    }
    for (size_t i = 0; i < panels.size(); ++i) {
        render_panel(out, panels[i], kPanelWidth * static_cast<double>(i), title_h);
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace pile::io
