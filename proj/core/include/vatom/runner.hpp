#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "vatom/model.hpp"
#include "vatom/squeezing.hpp"

namespace vatom {

/// Initial state given as explicit angles.
struct AngleInitial {
    double alpha = 0.0;
    double beta = 0.0;
    AngleConvention convention = AngleConvention::beta_on_c;
};

using InitialSpec = std::variant<Preset, AngleInitial, InitialAmplitudes>;

struct RunConfig {
    SystemParams params{1.0, 10.0, 0.5, 0.0};
    InitialSpec initial = Preset::S1;
    double t_max = 50.0;
    double dt = 0.01;
    std::vector<std::string> outputs;  // CSV column subset; empty = all
};

/// One grid point: the amplitudes and every derived observable.
struct Sample {
    AmplitudeSet amps;
    SqueezingRecord obs;
};

using Trajectory = std::vector<Sample>;

InitialAmplitudes resolve_initial(const InitialSpec& spec);

/// Evaluates the closed forms on the grid t = 0, dt, ..., t_max.
/// Deterministic; module errors are rethrown with the offending t attached.
Trajectory evolve(const RunConfig& config);

struct SweepAxis {
    std::string name;  // one of theta, gamma0, delta, alpha, beta
    std::vector<double> values;
};

struct LabelledRun {
    std::string label;
    RunConfig config;
    Trajectory trajectory;
};

/// Cartesian product of the axes over the base config; cells evaluate in
/// parallel but the output order follows coordinate order.
std::vector<LabelledRun> sweep(const RunConfig& base, std::span<const SweepAxis> axes);

enum class FigureId { fig1, fig2, fig3, fig4, fig5, fig6, fig7, fig8 };

FigureId parse_figure_id(const std::string& name);
std::string figure_name(FigureId id);

struct FigureBundle {
    FigureId id;
    std::vector<LabelledRun> runs;
    /// Observable panels this figure reports (CSV column names).
    std::vector<std::string> panels;
};

/// Preset parameter sets, kappa = 1 throughout:
///   fig1 S1 theta=0.5 delta=0 gamma0 in {0.1,10}   fig2 S1 delta=0 gamma0=10 theta in {0,0.5,1}
///   fig3 S2 theta=1   delta=0 gamma0 in {0.1,10}   fig4 S2 delta=0 gamma0=10 theta in {0,0.5,1}
///   fig5 S2 theta=1   delta=5 gamma0 in {0.1,10}   fig6 S2 delta=5 gamma0=10 theta in {0,0.5,1}
///   fig7 S2 theta=1 gamma0=10 delta in {0,5,10}    fig8 S2 theta=1 gamma0 in {0.1,10} x delta in {0,5}
FigureBundle figure(FigureId id);

/// The labelled configurations of a figure without evaluating them.
std::vector<LabelledRun> figure_configs(FigureId id);

// Trajectory readings. Curve landmarks are extracted the way one reads them
// off a plot: sign changes by linear interpolation between bracketing grid
// points, "reached the floor" as first entry into a band around the curve
// minimum.

using SampleValue = std::function<double(const Sample&)>;

/// First t where the value crosses zero, linearly interpolated.
std::optional<double> first_zero_crossing(std::span<const Sample> traj, const SampleValue& value);

/// First t where value(t) <= min + fraction * (max - min) over the run.
std::optional<double> time_reaching_minimum(std::span<const Sample> traj, const SampleValue& value,
                                            double fraction = 0.01);

/// Last t at which the value still sits above min + fraction * (max - min);
/// past this time the curve has settled onto its stable minimum.
std::optional<double> settling_time(std::span<const Sample> traj, const SampleValue& value,
                                    double fraction = 0.005);

struct NegativeExcursion {
    double start = 0.0;   // interpolated downward crossing
    double end = 0.0;     // interpolated upward crossing (or last t)
    double center = 0.0;  // midpoint of the interval
    double min_value = 0.0;
    double min_t = 0.0;
};

/// Contiguous value < 0 intervals with interpolated endpoints.
std::vector<NegativeExcursion> negative_excursions(std::span<const Sample> traj,
                                                   const SampleValue& value);

}  // namespace vatom
