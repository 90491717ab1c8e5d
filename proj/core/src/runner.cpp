#include "vatom/runner.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <stdexcept>

#include "vatom/errors.hpp"

namespace vatom {

namespace {

std::size_t grid_points(double t_max, double dt) {
    if (!(dt > 0.0)) {
        throw std::invalid_argument("RunConfig: dt must be positive");
    }
    if (t_max < dt) {
        throw std::invalid_argument("RunConfig: t_max must be at least dt");
    }
    return static_cast<std::size_t>(std::floor(t_max / dt + 0.5)) + 1;
}

std::string format_value(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

// Short axis tags used in run labels and output file names.
std::string axis_tag(const std::string& name) {
    if (name == "gamma0") return "gamma";
    return name;
}

AngleInitial preset_angles(Preset preset) {
    constexpr double pi = 3.141592653589793238462643383279502884;
    if (preset == Preset::S1) {
        return {pi / 4.0, 0.0, AngleConvention::beta_on_c};
    }
    return {pi / 2.5, pi / 10.0, AngleConvention::beta_on_c};
}

RunConfig apply_axis_value(const RunConfig& base, const std::string& name, double value) {
    RunConfig next = base;
    if (name == "theta") {
        next.params = SystemParams(base.params.kappa, base.params.gamma0, value,
                                   base.params.delta);
    } else if (name == "gamma0") {
        next.params = SystemParams(base.params.kappa, value, base.params.theta,
                                   base.params.delta);
    } else if (name == "delta") {
        next.params = SystemParams(base.params.kappa, base.params.gamma0, base.params.theta,
                                   value);
    } else if (name == "alpha" || name == "beta") {
        AngleInitial angles;
        if (std::holds_alternative<AngleInitial>(base.initial)) {
            angles = std::get<AngleInitial>(base.initial);
        } else if (std::holds_alternative<Preset>(base.initial)) {
            angles = preset_angles(std::get<Preset>(base.initial));
        } else {
            throw std::invalid_argument("sweep: axis '" + name +
                                        "' needs an angle-parametrized initial state");
        }
        (name == "alpha" ? angles.alpha : angles.beta) = value;
        next.initial = angles;
    } else {
        throw UnknownParameter("sweep: unknown parameter '" + name + "'");
    }
    return next;
}

void expand_cells(const RunConfig& base, std::span<const SweepAxis> axes, std::size_t index,
                  const std::string& label, std::vector<LabelledRun>& cells) {
    if (index == axes.size()) {
        cells.push_back({label, base, {}});
        return;
    }
    const SweepAxis& axis = axes[index];
    if (axis.values.empty()) {
        throw std::invalid_argument("sweep: axis '" + axis.name + "' has no values");
    }
    for (double value : axis.values) {
        std::string cell_label = axis_tag(axis.name) + format_value(value);
        if (!label.empty()) {
            cell_label = label + "_" + cell_label;
        }
        expand_cells(apply_axis_value(base, axis.name, value), axes, index + 1, cell_label,
                     cells);
    }
}

const std::vector<std::string> kFullPanels = {"E_Sx", "E_Sy", "V_Sx", "V_Sy", "Sz_expect"};

}  // namespace

InitialAmplitudes resolve_initial(const InitialSpec& spec) {
    if (std::holds_alternative<Preset>(spec)) {
        return preset_amplitudes(std::get<Preset>(spec));
    }
    if (std::holds_alternative<AngleInitial>(spec)) {
        const auto& a = std::get<AngleInitial>(spec);
        return amplitudes_from_angles(a.alpha, a.beta, a.convention);
    }
    return std::get<InitialAmplitudes>(spec);
}

Trajectory evolve(const RunConfig& config) {
    const std::size_t n = grid_points(config.t_max, config.dt);
    const InitialAmplitudes init = resolve_initial(config.initial);

    Trajectory traj;
    traj.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) * config.dt;
        try {
            Sample s;
            s.amps = evolve_amplitudes(config.params, init, t);
            s.obs = make_record(s.amps);
            traj.push_back(std::move(s));
        } catch (const std::exception& e) {
            throw std::runtime_error("evolve: at t=" + std::to_string(t) + ": " + e.what());
        }
    }
    return traj;
}

std::vector<LabelledRun> sweep(const RunConfig& base, std::span<const SweepAxis> axes) {
    std::vector<LabelledRun> cells;
    expand_cells(base, axes, 0, "", cells);

    std::vector<std::future<Trajectory>> futures;
    futures.reserve(cells.size());
    for (const auto& cell : cells) {
        futures.push_back(
            std::async(std::launch::async, [config = cell.config] { return evolve(config); }));
    }
    for (std::size_t i = 0; i < cells.size(); ++i) {
        cells[i].trajectory = futures[i].get();
    }
    return cells;
}

FigureId parse_figure_id(const std::string& name) {
    for (FigureId id : {FigureId::fig1, FigureId::fig2, FigureId::fig3, FigureId::fig4,
                        FigureId::fig5, FigureId::fig6, FigureId::fig7, FigureId::fig8}) {
        if (figure_name(id) == name) {
            return id;
        }
    }
    throw UnknownFigure("unknown figure '" + name + "', expected fig1..fig8");
}

std::string figure_name(FigureId id) {
    return "fig" + std::to_string(static_cast<int>(id) + 1);
}

std::vector<LabelledRun> figure_configs(FigureId id) {
    RunConfig base;
    std::vector<SweepAxis> axes;
    switch (id) {
        case FigureId::fig1:
            base.params = SystemParams(1.0, 10.0, 0.5, 0.0);
            base.initial = Preset::S1;
            axes = {{"gamma0", {0.1, 10.0}}};
            break;
        case FigureId::fig2:
            base.params = SystemParams(1.0, 10.0, 0.5, 0.0);
            base.initial = Preset::S1;
            axes = {{"theta", {0.0, 0.5, 1.0}}};
            break;
        case FigureId::fig3:
            base.params = SystemParams(1.0, 10.0, 1.0, 0.0);
            base.initial = Preset::S2;
            axes = {{"gamma0", {0.1, 10.0}}};
            break;
        case FigureId::fig4:
            base.params = SystemParams(1.0, 10.0, 0.5, 0.0);
            base.initial = Preset::S2;
            axes = {{"theta", {0.0, 0.5, 1.0}}};
            break;
        case FigureId::fig5:
            base.params = SystemParams(1.0, 10.0, 1.0, 5.0);
            base.initial = Preset::S2;
            axes = {{"gamma0", {0.1, 10.0}}};
            break;
        case FigureId::fig6:
            base.params = SystemParams(1.0, 10.0, 0.5, 5.0);
            base.initial = Preset::S2;
            axes = {{"theta", {0.0, 0.5, 1.0}}};
            break;
        case FigureId::fig7:
            base.params = SystemParams(1.0, 10.0, 1.0, 0.0);
            base.initial = Preset::S2;
            axes = {{"delta", {0.0, 5.0, 10.0}}};
            break;
        case FigureId::fig8:
            base.params = SystemParams(1.0, 10.0, 1.0, 0.0);
            base.initial = Preset::S2;
            base.outputs = {"t", "coherence_l1"};
            axes = {{"delta", {0.0, 5.0}}, {"gamma0", {0.1, 10.0}}};
            break;
    }
    std::vector<LabelledRun> cells;
    expand_cells(base, axes, 0, "", cells);
    return cells;
}

FigureBundle figure(FigureId id) {
    FigureBundle bundle;
    bundle.id = id;
    bundle.runs = figure_configs(id);
    bundle.panels = kFullPanels;
    if (id == FigureId::fig7) {
        bundle.panels = {"E_Sx", "V_Sx", "Sz_expect"};
    } else if (id == FigureId::fig8) {
        bundle.panels = {"coherence_l1"};
    }

    std::vector<std::future<Trajectory>> futures;
    futures.reserve(bundle.runs.size());
    for (const auto& run : bundle.runs) {
        futures.push_back(
            std::async(std::launch::async, [config = run.config] { return evolve(config); }));
    }
    for (std::size_t i = 0; i < bundle.runs.size(); ++i) {
        bundle.runs[i].trajectory = futures[i].get();
    }
    return bundle;
}

std::optional<double> first_zero_crossing(std::span<const Sample> traj,
                                          const SampleValue& value) {
    for (std::size_t i = 1; i < traj.size(); ++i) {
        const double prev = value(traj[i - 1]);
        const double curr = value(traj[i]);
        if (prev == 0.0) {
            return traj[i - 1].amps.t;
        }
        if ((prev > 0.0 && curr <= 0.0) || (prev < 0.0 && curr >= 0.0)) {
            const double t0 = traj[i - 1].amps.t;
            const double t1 = traj[i].amps.t;
            return t0 + (t1 - t0) * prev / (prev - curr);
        }
    }
    return std::nullopt;
}

std::optional<double> time_reaching_minimum(std::span<const Sample> traj,
                                            const SampleValue& value, double fraction) {
    if (traj.empty()) {
        return std::nullopt;
    }
    double lo = value(traj.front());
    double hi = lo;
    for (const auto& s : traj) {
        const double v = value(s);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    const double band = lo + fraction * (hi - lo);
    for (const auto& s : traj) {
        if (value(s) <= band) {
            return s.amps.t;
        }
    }
    return std::nullopt;
}

std::optional<double> settling_time(std::span<const Sample> traj, const SampleValue& value,
                                    double fraction) {
    if (traj.empty()) {
        return std::nullopt;
    }
    double lo = value(traj.front());
    double hi = lo;
    for (const auto& s : traj) {
        const double v = value(s);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    const double band = lo + fraction * (hi - lo);
    double last = traj.front().amps.t;
    for (const auto& s : traj) {
        if (value(s) > band) {
            last = s.amps.t;
        }
    }
    return last;
}

std::vector<NegativeExcursion> negative_excursions(std::span<const Sample> traj,
                                                   const SampleValue& value) {
    std::vector<NegativeExcursion> out;
    bool inside = false;
    NegativeExcursion current;
    auto interpolate = [&](std::size_t i) {
        const double prev = value(traj[i - 1]);
        const double curr = value(traj[i]);
        const double t0 = traj[i - 1].amps.t;
        const double t1 = traj[i].amps.t;
        return t0 + (t1 - t0) * prev / (prev - curr);
    };
    for (std::size_t i = 0; i < traj.size(); ++i) {
        const double v = value(traj[i]);
        if (!inside && v < 0.0) {
            inside = true;
            current = NegativeExcursion{};
            current.start = i == 0 ? traj[0].amps.t : interpolate(i);
            current.min_value = v;
            current.min_t = traj[i].amps.t;
        } else if (inside && v < 0.0) {
            if (v < current.min_value) {
                current.min_value = v;
                current.min_t = traj[i].amps.t;
            }
        } else if (inside && v >= 0.0) {
            current.end = interpolate(i);
            current.center = 0.5 * (current.start + current.end);
            out.push_back(current);
            inside = false;
        }
    }
    if (inside) {
        current.end = traj.back().amps.t;
        current.center = 0.5 * (current.start + current.end);
        out.push_back(current);
    }
    return out;
}

}  // namespace vatom
