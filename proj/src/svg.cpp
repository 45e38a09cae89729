#include "twoatom/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace twoatom {

namespace {

constexpr int kWidth = 800;
constexpr int kHeight = 600;

const char* kPalette[] = {"#1f77b4", "#2ca02c", "#d62728", "#111111",
                          "#9467bd", "#ff7f0e", "#17becf", "#8c564b"};
constexpr int kPaletteSize = 8;

std::string coord(double value) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.2f", value);
    return buffer;
}

std::string tick_label(double value) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.4g", value);
    return buffer;
}

std::string find_meta(const SweepResult& result, const std::string& key) {
    for (const auto& [k, v] : result.metadata)
        if (k == key) return v;
    return {};
}

std::string x_axis_label(const std::string& axis) {
    if (axis == "theta") return "θ/π";
    if (axis == "detuning_l") return "Δ_L/Γ0";
    if (axis == "delta") return "Δ/Γ0";
    if (axis == "separation") return "r12/λ";
    return axis;
}

std::string y_axis_label(const SweepResult& result) {
    bool all_contrast = true;
    for (size_t c = 1; c < result.columns.size(); ++c)
        all_contrast &= result.columns[c].find("C_") != std::string::npos;
    return all_contrast ? "C" : "I/(uΓ0)";
}

void begin_svg(std::ostream& out, const std::string& title) {
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
        << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << " "
        << kHeight << "\">\n";
    out << "<rect width=\"" << kWidth << "\" height=\"" << kHeight
        << "\" fill=\"white\"/>\n";
    if (!title.empty())
        out << "<text x=\"400\" y=\"24\" text-anchor=\"middle\" "
               "font-family=\"monospace\" font-size=\"16\">"
            << title << "</text>\n";
}

void legend(std::ostream& out, const SweepResult& result, double x,
            double y) {
    for (size_t c = 1; c < result.columns.size(); ++c) {
        const double row_y = y + 20.0 * (c - 1);
        out << "<line x1=\"" << coord(x) << "\" y1=\"" << coord(row_y)
            << "\" x2=\"" << coord(x + 24) << "\" y2=\"" << coord(row_y)
            << "\" stroke=\"" << kPalette[(c - 1) % kPaletteSize]
            << "\" stroke-width=\"2\"/>\n";
        out << "<text x=\"" << coord(x + 30) << "\" y=\"" << coord(row_y + 4)
            << "\" font-family=\"monospace\" font-size=\"11\">"
            << result.columns[c] << "</text>\n";
    }
}

void render_cartesian(const SweepResult& result, std::ostream& out) {
    const double left = 70, right = 610, top = 50, bottom = 545;
    const double x_min = result.rows.front()[0];
    const double x_max = result.rows.back()[0];

    double y_min = result.rows[0][1], y_max = y_min;
    for (const auto& row : result.rows)
        for (size_t c = 1; c < row.size(); ++c) {
            y_min = std::min(y_min, row[c]);
            y_max = std::max(y_max, row[c]);
        }
    if (y_max == y_min) {
        y_max += 1.0;
        y_min -= 1.0;
    }
    const double pad = 0.05 * (y_max - y_min);
    y_min -= pad;
    y_max += pad;

    const bool theta_axis = result.columns.front() == "theta";
    const double x_scale = theta_axis ? 1.0 / std::numbers::pi : 1.0;

    auto px = [&](double x) {
        return left + (x - x_min) / (x_max - x_min) * (right - left);
    };
    auto py = [&](double y) {
        return bottom - (y - y_min) / (y_max - y_min) * (bottom - top);
    };

    begin_svg(out, find_meta(result, "preset").empty()
                       ? find_meta(result, "label")
                       : find_meta(result, "preset"));

    // frame and ticks
    out << "<rect x=\"" << coord(left) << "\" y=\"" << coord(top)
        << "\" width=\"" << coord(right - left) << "\" height=\""
        << coord(bottom - top)
        << "\" fill=\"none\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
    for (int t = 0; t <= 4; ++t) {
        const double f = t / 4.0;
        const double x = x_min + f * (x_max - x_min);
        const double y = y_min + f * (y_max - y_min);
        out << "<line class=\"grid\" x1=\"" << coord(px(x)) << "\" y1=\""
            << coord(top) << "\" x2=\"" << coord(px(x)) << "\" y2=\""
            << coord(bottom) << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        out << "<line class=\"grid\" x1=\"" << coord(left) << "\" y1=\""
            << coord(py(y)) << "\" x2=\"" << coord(right) << "\" y2=\""
            << coord(py(y)) << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        out << "<text x=\"" << coord(px(x)) << "\" y=\"" << coord(bottom + 18)
            << "\" text-anchor=\"middle\" font-family=\"monospace\" "
               "font-size=\"11\">"
            << tick_label(x * x_scale) << "</text>\n";
        out << "<text x=\"" << coord(left - 8) << "\" y=\""
            << coord(py(y) + 4)
            << "\" text-anchor=\"end\" font-family=\"monospace\" "
               "font-size=\"11\">"
            << tick_label(y) << "</text>\n";
    }
    if (y_min < 0.0 && y_max > 0.0) {
        out << "<line class=\"grid zero\" x1=\"" << coord(left) << "\" y1=\""
            << coord(py(0.0)) << "\" x2=\"" << coord(right) << "\" y2=\""
            << coord(py(0.0))
            << "\" stroke=\"#888888\" stroke-width=\"1\"/>\n";
    }

    out << "<text x=\"" << coord(0.5 * (left + right)) << "\" y=\""
        << coord(bottom + 40)
        << "\" text-anchor=\"middle\" font-family=\"monospace\" "
           "font-size=\"13\">"
        << x_axis_label(result.columns.front()) << "</text>\n";
    out << "<text x=\"18\" y=\"" << coord(0.5 * (top + bottom))
        << "\" text-anchor=\"middle\" font-family=\"monospace\" "
           "font-size=\"13\" transform=\"rotate(-90 18 "
        << coord(0.5 * (top + bottom)) << ")\">" << y_axis_label(result)
        << "</text>\n";

    for (size_t c = 1; c < result.columns.size(); ++c) {
        out << "<polyline fill=\"none\" stroke=\""
            << kPalette[(c - 1) % kPaletteSize]
            << "\" stroke-width=\"1.5\" points=\"";
        for (size_t i = 0; i < result.rows.size(); ++i) {
            if (i) out << ' ';
            out << coord(px(result.rows[i][0])) << ','
                << coord(py(result.rows[i][c]));
        }
        out << "\"/>\n";
    }

    legend(out, result, 625, 70);
    out << "</svg>\n";
}

void render_polar(const SweepResult& result, std::ostream& out) {
    if (result.columns.front() != "theta")
        throw std::invalid_argument("polar style requires a theta axis");

    const double cx = 360, cy = 320, radius = 240;

    double r_max = 0.0;
    for (const auto& row : result.rows)
        for (size_t c = 1; c < row.size(); ++c)
            r_max = std::max(r_max, std::abs(row[c]));
    if (r_max == 0.0) r_max = 1.0;

    auto px = [&](double theta, double r) {
        return cx + r / r_max * radius * std::cos(theta);
    };
    auto py = [&](double theta, double r) {
        return cy - r / r_max * radius * std::sin(theta);
    };

    begin_svg(out, find_meta(result, "preset").empty()
                       ? find_meta(result, "label")
                       : find_meta(result, "preset"));

    for (int ring = 1; ring <= 3; ++ring) {
        const double rr = radius * ring / 3.0;
        out << "<circle cx=\"" << coord(cx) << "\" cy=\"" << coord(cy)
            << "\" r=\"" << coord(rr)
            << "\" fill=\"none\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        out << "<text x=\"" << coord(cx + rr + 2) << "\" y=\""
            << coord(cy - 4) << "\" font-family=\"monospace\" "
               "font-size=\"10\">"
            << tick_label(r_max * ring / 3.0) << "</text>\n";
    }
    for (int spoke = 0; spoke < 8; ++spoke) {
        const double angle = spoke * std::numbers::pi / 4.0;
        out << "<line x1=\"" << coord(cx) << "\" y1=\"" << coord(cy)
            << "\" x2=\"" << coord(cx + radius * std::cos(angle)) << "\" y2=\""
            << coord(cy - radius * std::sin(angle))
            << "\" stroke=\"#eeeeee\" stroke-width=\"1\"/>\n";
    }
    const char* spoke_labels[] = {"0", "π/4", "π/2", "3π/4", "π"};
    for (int spoke = 0; spoke <= 4; ++spoke) {
        const double angle = spoke * std::numbers::pi / 4.0;
        out << "<text x=\"" << coord(cx + (radius + 16) * std::cos(angle))
            << "\" y=\"" << coord(cy - (radius + 16) * std::sin(angle) + 4)
            << "\" text-anchor=\"middle\" font-family=\"monospace\" "
               "font-size=\"12\">"
            << spoke_labels[spoke] << "</text>\n";
    }
    out << "<text x=\"" << coord(cx) << "\" y=\"" << coord(cy + radius + 34)
        << "\" text-anchor=\"middle\" font-family=\"monospace\" "
           "font-size=\"13\">θ from the interatomic axis, radius "
        << y_axis_label(result) << "</text>\n";

    // The pattern depends on θ only through cos θ, so it is rotationally
    // symmetric about the axis; mirror the half-plane into a closed curve.
    for (size_t c = 1; c < result.columns.size(); ++c) {
        out << "<polyline fill=\"none\" stroke=\""
            << kPalette[(c - 1) % kPaletteSize]
            << "\" stroke-width=\"1.5\" points=\"";
        bool first = true;
        for (size_t i = 0; i < result.rows.size(); ++i) {
            if (!first) out << ' ';
            first = false;
            out << coord(px(result.rows[i][0], result.rows[i][c])) << ','
                << coord(py(result.rows[i][0], result.rows[i][c]));
        }
        for (size_t i = result.rows.size(); i-- > 0;) {
            out << ' ' << coord(px(-result.rows[i][0], result.rows[i][c]))
                << ',' << coord(py(-result.rows[i][0], result.rows[i][c]));
        }
        out << "\"/>\n";
    }

    legend(out, result, 640, 70);
    out << "</svg>\n";
}

}  // namespace

void render_svg(const SweepResult& result, PlotStyle style,
                std::ostream& out) {
    if (result.rows.size() < 2)
        throw std::invalid_argument("svg rendering needs at least two rows");
    if (result.columns.size() < 2)
        throw std::invalid_argument("svg rendering needs a value column");

    if (style == PlotStyle::polar)
        render_polar(result, out);
    else
        render_cartesian(result, out);
}

void render_svg(const SweepResult& result, PlotStyle style,
                const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    render_svg(result, style, out);
    out.flush();
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace twoatom
