#include "vatom/output.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>

#include "vatom/errors.hpp"

namespace vatom {

namespace {

std::string format_sig12(double v) {
    std::array<char, 40> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                   std::chars_format::general, 12);
    return std::string(buf.data(), ptr);
}

std::string format_fixed(double v, int precision) {
    std::array<char, 40> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                   std::chars_format::fixed, precision);
    return std::string(buf.data(), ptr);
}

using ColumnGetter = double (*)(const Sample&);

struct Column {
    const char* name;
    ColumnGetter get;
};

constexpr std::array<Column, 20> kColumns = {{
    {"t", [](const Sample& s) { return s.amps.t; }},
    {"dA_re", [](const Sample& s) { return s.amps.dA.real(); }},
    {"dA_im", [](const Sample& s) { return s.amps.dA.imag(); }},
    {"dB_re", [](const Sample& s) { return s.amps.dB.real(); }},
    {"dB_im", [](const Sample& s) { return s.amps.dB.imag(); }},
    {"dC_re", [](const Sample& s) { return s.amps.dC.real(); }},
    {"dC_im", [](const Sample& s) { return s.amps.dC.imag(); }},
    {"bath_weight", [](const Sample& s) { return s.amps.bath_weight; }},
    {"E_Sx", [](const Sample& s) { return s.obs.e_sx; }},
    {"E_Sy", [](const Sample& s) { return s.obs.e_sy; }},
    {"V_Sx", [](const Sample& s) { return s.obs.v_sx; }},
    {"V_Sy", [](const Sample& s) { return s.obs.v_sy; }},
    {"H_Sx", [](const Sample& s) { return s.obs.h_sx; }},
    {"H_Sy", [](const Sample& s) { return s.obs.h_sy; }},
    {"H_Sz", [](const Sample& s) { return s.obs.h_sz; }},
    {"dSx", [](const Sample& s) { return s.obs.d_sx; }},
    {"dSy", [](const Sample& s) { return s.obs.d_sy; }},
    {"Sz_expect", [](const Sample& s) { return s.obs.sz_expect; }},
    {"entropy_sum", [](const Sample& s) { return s.obs.entropy_sum; }},
    {"coherence_l1", [](const Sample& s) { return s.obs.coherence; }},
}};

const Column& column_by_name(const std::string& name) {
    for (const auto& col : kColumns) {
        if (name == col.name) {
            return col;
        }
    }
    throw std::invalid_argument("unknown CSV column '" + name + "'");
}

struct TickSpec {
    double lo = 0.0;
    double hi = 1.0;
    double step = 0.2;
};

// Tick step from the 1/2/5 decades, covering [lo, hi] with about n ticks.
TickSpec nice_ticks(double lo, double hi, int n) {
    if (!(hi > lo)) {
        hi = lo + 1.0;
        lo -= 1.0;
    }
    const double raw = (hi - lo) / std::max(n, 2);
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    double step = mag;
    for (double m : {1.0, 2.0, 5.0, 10.0}) {
        if (m * mag >= raw) {
            step = m * mag;
            break;
        }
    }
    TickSpec spec;
    spec.step = step;
    spec.lo = std::floor(lo / step) * step;
    spec.hi = std::ceil(hi / step) * step;
    return spec;
}

std::string tick_label(double v) {
    std::array<char, 40> buf{};
    auto [ptr, ec] =
        std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 6);
    return std::string(buf.data(), ptr);
}

constexpr std::array<const char*, 6> kPalette = {"#c0392b", "#2980b9", "#27ae60",
                                                 "#8e44ad", "#e67e22", "#16a085"};

std::string xml_escape(const std::string& raw) {
    std::string out;
    out.reserve(raw.size());
    for (char c : raw) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += c;
        }
    }
    return out;
}

void write_file_or_throw(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open '" + path.string() + "' for writing");
    }
    out << content;
    out.flush();
    if (!out) {
        throw IoError("write failed for '" + path.string() + "'");
    }
}

}  // namespace

double sample_value(const Sample& sample, const std::string& column) {
    return column_by_name(column).get(sample);
}

const std::vector<std::string>& csv_columns() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        v.reserve(kColumns.size());
        for (const auto& col : kColumns) {
            v.emplace_back(col.name);
        }
        return v;
    }();
    return names;
}

void write_csv(const Trajectory& traj, const std::filesystem::path& path,
               std::span<const std::string> columns) {
    if (traj.empty()) {
        throw std::invalid_argument("write_csv: empty trajectory");
    }
    // Subset selection preserves the schema order.
    std::vector<const Column*> active;
    if (columns.empty()) {
        for (const auto& col : kColumns) {
            active.push_back(&col);
        }
    } else {
        for (const auto& col : kColumns) {
            if (std::find(columns.begin(), columns.end(), col.name) != columns.end()) {
                active.push_back(&col);
            }
        }
        if (active.size() != columns.size()) {
            for (const auto& name : columns) {
                column_by_name(name);  // throws with the offending name
            }
        }
    }

    std::string body;
    body.reserve(traj.size() * active.size() * 16);
    for (std::size_t i = 0; i < active.size(); ++i) {
        if (i > 0) {
            body += ',';
        }
        body += active[i]->name;
    }
    body += '\n';
    for (const auto& sample : traj) {
        for (std::size_t i = 0; i < active.size(); ++i) {
            if (i > 0) {
                body += ',';
            }
            body += format_sig12(active[i]->get(sample));
        }
        body += '\n';
    }
    write_file_or_throw(path, body);
}

void write_svg_plot(std::span<const Series> series, const PlotStyle& style,
                    const std::filesystem::path& path) {
    if (series.empty()) {
        throw EmptySeries("write_svg_plot: no series given");
    }
    double x_lo = 0.0, x_hi = 1.0, y_lo = 0.0, y_hi = 1.0;
    bool first = true;
    for (const auto& s : series) {
        if (s.points.empty()) {
            throw EmptySeries("write_svg_plot: series '" + s.label + "' is empty");
        }
        for (const auto& [x, y] : s.points) {
            if (!std::isfinite(x) || !std::isfinite(y)) {
                throw std::invalid_argument("write_svg_plot: non-finite point in '" + s.label +
                                            "'");
            }
            if (first) {
                x_lo = x_hi = x;
                y_lo = y_hi = y;
                first = false;
            } else {
                x_lo = std::min(x_lo, x);
                x_hi = std::max(x_hi, x);
                y_lo = std::min(y_lo, y);
                y_hi = std::max(y_hi, y);
            }
        }
    }
    const TickSpec xt = nice_ticks(x_lo, x_hi, 8);
    const TickSpec yt = nice_ticks(y_lo, y_hi, 6);

    const double ml = 64.0, mr = 150.0, mt = 36.0, mb = 46.0;
    const double pw = style.width - ml - mr;
    const double ph = style.height - mt - mb;
    auto px = [&](double x) { return ml + pw * (x - xt.lo) / (xt.hi - xt.lo); };
    auto py = [&](double y) { return mt + ph * (yt.hi - y) / (yt.hi - yt.lo); };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << style.width
        << "\" height=\"" << style.height << "\" viewBox=\"0 0 " << style.width << ' '
        << style.height << "\">\n";
    svg << "<rect width=\"" << style.width << "\" height=\"" << style.height
        << "\" fill=\"white\"/>\n";
    if (!style.title.empty()) {
        svg << "<text x=\"" << format_fixed(ml + pw / 2.0, 2)
            << "\" y=\"22\" font-family=\"sans-serif\" font-size=\"15\" "
               "text-anchor=\"middle\">"
            << xml_escape(style.title) << "</text>\n";
    }

    // Gridlines and tick labels.
    svg << "<g font-family=\"sans-serif\" font-size=\"11\" fill=\"#333333\">\n";
    for (double x = xt.lo; x <= xt.hi + 0.5 * xt.step; x += xt.step) {
        const std::string cx = format_fixed(px(x), 2);
        svg << "<line x1=\"" << cx << "\" y1=\"" << format_fixed(mt, 2) << "\" x2=\"" << cx
            << "\" y2=\"" << format_fixed(mt + ph, 2)
            << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        svg << "<text x=\"" << cx << "\" y=\"" << format_fixed(mt + ph + 16.0, 2)
            << "\" text-anchor=\"middle\">" << tick_label(x) << "</text>\n";
    }
    for (double y = yt.lo; y <= yt.hi + 0.5 * yt.step; y += yt.step) {
        const std::string cy = format_fixed(py(y), 2);
        svg << "<line x1=\"" << format_fixed(ml, 2) << "\" y1=\"" << cy << "\" x2=\""
            << format_fixed(ml + pw, 2) << "\" y2=\"" << cy
            << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        svg << "<text x=\"" << format_fixed(ml - 6.0, 2) << "\" y=\""
            << format_fixed(py(y) + 4.0, 2) << "\" text-anchor=\"end\">" << tick_label(y)
            << "</text>\n";
    }
    svg << "</g>\n";

    // Zero line when it lies inside the frame.
    if (yt.lo < 0.0 && yt.hi > 0.0) {
        svg << "<line x1=\"" << format_fixed(ml, 2) << "\" y1=\"" << format_fixed(py(0.0), 2)
            << "\" x2=\"" << format_fixed(ml + pw, 2) << "\" y2=\"" << format_fixed(py(0.0), 2)
            << "\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
    }

    // Frame.
    svg << "<rect x=\"" << format_fixed(ml, 2) << "\" y=\"" << format_fixed(mt, 2)
        << "\" width=\"" << format_fixed(pw, 2) << "\" height=\"" << format_fixed(ph, 2)
        << "\" fill=\"none\" stroke=\"#333333\" stroke-width=\"1\"/>\n";

    // Axis labels.
    svg << "<g font-family=\"sans-serif\" font-size=\"13\" fill=\"#111111\">\n";
    svg << "<text x=\"" << format_fixed(ml + pw / 2.0, 2) << "\" y=\""
        << format_fixed(mt + ph + 38.0, 2) << "\" text-anchor=\"middle\">"
        << xml_escape(style.x_label) << "</text>\n";
    if (!style.y_label.empty()) {
        svg << "<text x=\"16\" y=\"" << format_fixed(mt + ph / 2.0, 2)
            << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
            << format_fixed(mt + ph / 2.0, 2) << ")\">" << xml_escape(style.y_label)
            << "</text>\n";
    }
    svg << "</g>\n";

    // Data polylines.
    for (std::size_t i = 0; i < series.size(); ++i) {
        svg << "<polyline fill=\"none\" stroke=\"" << kPalette[i % kPalette.size()]
            << "\" stroke-width=\"1.5\" points=\"";
        for (const auto& [x, y] : series[i].points) {
            svg << format_fixed(px(x), 2) << ',' << format_fixed(py(y), 2) << ' ';
        }
        svg << "\"/>\n";
    }

    // Legend.
    svg << "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"#111111\">\n";
    for (std::size_t i = 0; i < series.size(); ++i) {
        const double ly = mt + 10.0 + 18.0 * static_cast<double>(i);
        svg << "<line x1=\"" << format_fixed(ml + pw + 12.0, 2) << "\" y1=\""
            << format_fixed(ly, 2) << "\" x2=\"" << format_fixed(ml + pw + 34.0, 2)
            << "\" y2=\"" << format_fixed(ly, 2) << "\" stroke=\""
            << kPalette[i % kPalette.size()] << "\" stroke-width=\"2\"/>\n";
        svg << "<text x=\"" << format_fixed(ml + pw + 40.0, 2) << "\" y=\""
            << format_fixed(ly + 4.0, 2) << "\">" << xml_escape(series[i].label)
            << "</text>\n";
    }
    svg << "</g>\n</svg>\n";

    write_file_or_throw(path, svg.str());
}

}  // namespace vatom
