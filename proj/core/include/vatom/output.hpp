#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "vatom/runner.hpp"

namespace vatom {

/// Fixed CSV column order; numbers are serialized with 12 significant digits
/// in C-locale formatting regardless of environment.
const std::vector<std::string>& csv_columns();

/// Value of one schema column for a sample; throws on unknown names.
double sample_value(const Sample& sample, const std::string& column);

/// Writes a trajectory (or the subset named in `columns`, kept in schema
/// order) to `path`; overwrites atomically within the same directory.
void write_csv(const Trajectory& traj, const std::filesystem::path& path,
               std::span<const std::string> columns = {});

struct Series {
    std::string label;
    std::vector<std::pair<double, double>> points;  // (t, value)
};

struct PlotStyle {
    int width = 860;
    int height = 480;
    std::string title;
    std::string x_label = "t";
    std::string y_label;
};

/// Standalone SVG 1.1 line chart: axes, tick labels, legend, one polyline
/// per series. Byte output is a pure function of the input.
void write_svg_plot(std::span<const Series> series, const PlotStyle& style,
                    const std::filesystem::path& path);

/// Command-line entry point (subcommands: evolve, sweep, figure, verify,
/// bound-search). Returns 0 on success, 1 on verification failure, 2 on
/// usage errors.
int run_cli(int argc, const char* const* argv);

}  // namespace vatom
