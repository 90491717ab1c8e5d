#include <algorithm>
#include <charconv>
#include <clocale>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "vatom/errors.hpp"
#include "vatom/oracle.hpp"
#include "vatom/output.hpp"
#include "vatom/runner.hpp"

namespace vatom {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

AngleConvention parse_convention(const std::string& token) {
    if (token == "beta-on-c") return AngleConvention::beta_on_c;
    if (token == "beta-on-b") return AngleConvention::beta_on_b;
    throw std::invalid_argument("convention must be 'beta-on-c' or 'beta-on-b', got '" + token +
                                "'");
}

Preset parse_preset(const std::string& token) {
    if (token == "S1") return Preset::S1;
    if (token == "S2") return Preset::S2;
    throw std::invalid_argument("preset must be 'S1' or 'S2', got '" + token + "'");
}

std::vector<double> parse_number_list(const std::string& csv) {
    std::vector<double> values;
    std::size_t pos = 0;
    while (pos <= csv.size()) {
        const std::size_t comma = std::min(csv.find(',', pos), csv.size());
        const std::string token = csv.substr(pos, comma - pos);
        try {
            std::size_t used = 0;
            values.push_back(std::stod(token, &used));
            if (used != token.size()) {
                throw std::invalid_argument(token);
            }
        } catch (const std::exception&) {
            throw std::invalid_argument("cannot parse number '" + token + "'");
        }
        pos = comma + 1;
        if (comma == csv.size()) {
            break;
        }
    }
    return values;
}

RunConfig config_from_json(const fs::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot read config '" + path.string() + "'");
    }
    json doc = json::parse(in);

    RunConfig config;
    const double kappa = doc.value("kappa", 1.0);
    const double gamma0 = doc.value("gamma0", 10.0);
    const double theta = doc.value("theta", 0.5);
    const double delta = doc.value("delta", 0.0);
    config.params = SystemParams(kappa, gamma0, theta, delta);
    config.t_max = doc.value("tmax", 50.0);
    config.dt = doc.value("dt", 0.01);
    if (doc.contains("outputs")) {
        config.outputs = doc.at("outputs").get<std::vector<std::string>>();
    }
    if (doc.contains("initial")) {
        const json& init = doc.at("initial");
        if (init.contains("preset")) {
            config.initial = parse_preset(init.at("preset").get<std::string>());
        } else if (init.contains("amplitudes")) {
            const auto rows = init.at("amplitudes").get<std::vector<std::vector<double>>>();
            if (rows.size() != 3 || rows[0].size() != 2 || rows[1].size() != 2 ||
                rows[2].size() != 2) {
                throw std::invalid_argument("initial.amplitudes must be three [re, im] pairs");
            }
            config.initial = InitialAmplitudes::normalized(Complex(rows[0][0], rows[0][1]),
                                                           Complex(rows[1][0], rows[1][1]),
                                                           Complex(rows[2][0], rows[2][1]));
        } else if (init.contains("alpha") || init.contains("beta")) {
            AngleInitial angles;
            angles.alpha = init.value("alpha", 0.0);
            angles.beta = init.value("beta", 0.0);
            angles.convention = parse_convention(init.value("convention", "beta-on-c"));
            config.initial = angles;
        } else {
            throw std::invalid_argument(
                "initial must contain 'preset', 'alpha'/'beta' or 'amplitudes'");
        }
    }
    return config;
}

// Flags shared by `evolve` and `sweep`.
struct RunOptions {
    double kappa = 1.0;
    double gamma0 = 10.0;
    double theta = 0.5;
    double delta = 0.0;
    double t_max = 50.0;
    double dt = 0.01;
    std::string preset;
    double alpha = 0.0;
    double beta = 0.0;
    std::string convention = "beta-on-c";
    std::string amplitudes;
    std::string config_file;
};

void add_run_options(CLI::App& cmd, RunOptions& opt) {
    cmd.add_option("--kappa", opt.kappa, "Spectral width (> 0)");
    cmd.add_option("--gamma0", opt.gamma0, "Decay coefficient (>= 0)");
    cmd.add_option("--theta", opt.theta, "Dipole-interference parameter in [-1, 1]");
    cmd.add_option("--delta", opt.delta, "Atom-cavity detuning");
    cmd.add_option("--tmax", opt.t_max, "Grid end time");
    cmd.add_option("--dt", opt.dt, "Grid spacing");
    cmd.add_option("--preset", opt.preset, "Initial state preset: S1 or S2");
    cmd.add_option("--alpha", opt.alpha, "Initial-state angle alpha");
    cmd.add_option("--beta", opt.beta, "Initial-state angle beta");
    cmd.add_option("--convention", opt.convention,
                   "Angle convention: beta-on-c (default) or beta-on-b");
    cmd.add_option("--amplitudes", opt.amplitudes,
                   "Raw amplitudes re,im,re,im,re,im for dA,dB,dC (normalized)");
    cmd.add_option("--config", opt.config_file, "JSON config file; flags override its values");
}

RunConfig build_run_config(const CLI::App& cmd, const RunOptions& opt) {
    RunConfig config;
    if (!opt.config_file.empty()) {
        config = config_from_json(opt.config_file);
    }
    auto given = [&cmd](const std::string& flag) { return cmd.count(flag) > 0; };
    const double kappa = given("--kappa") ? opt.kappa : config.params.kappa;
    const double gamma0 = given("--gamma0") ? opt.gamma0 : config.params.gamma0;
    const double theta = given("--theta") ? opt.theta : config.params.theta;
    const double delta = given("--delta") ? opt.delta : config.params.delta;
    config.params = SystemParams(kappa, gamma0, theta, delta);
    if (given("--tmax")) config.t_max = opt.t_max;
    if (given("--dt")) config.dt = opt.dt;

    const bool by_preset = given("--preset");
    const bool by_angles = given("--alpha") || given("--beta") || given("--convention");
    const bool by_amplitudes = given("--amplitudes");
    if (by_preset + by_angles + by_amplitudes > 1) {
        throw std::invalid_argument(
            "choose one of --preset, --alpha/--beta/--convention, --amplitudes");
    }
    if (by_preset) {
        config.initial = parse_preset(opt.preset);
    } else if (by_angles) {
        config.initial = AngleInitial{opt.alpha, opt.beta, parse_convention(opt.convention)};
    } else if (by_amplitudes) {
        const auto v = parse_number_list(opt.amplitudes);
        if (v.size() != 6) {
            throw std::invalid_argument("--amplitudes expects 6 numbers, got " +
                                        std::to_string(v.size()));
        }
        config.initial = InitialAmplitudes::normalized(Complex(v[0], v[1]), Complex(v[2], v[3]),
                                                       Complex(v[4], v[5]));
    }
    return config;
}

std::vector<std::string> plot_columns(const RunConfig& config) {
    std::vector<std::string> cols;
    for (const auto& name : config.outputs.empty() ? csv_columns() : config.outputs) {
        if (name == "E_Sx" || name == "E_Sy" || name == "V_Sx" || name == "V_Sy" ||
            name == "Sz_expect" || name == "coherence_l1") {
            cols.push_back(name);
        }
    }
    if (cols.empty()) {
        cols = {"E_Sx", "E_Sy", "V_Sx", "V_Sy", "Sz_expect"};
    }
    return cols;
}

Series series_of(const Trajectory& traj, const std::string& column, std::string label) {
    Series s;
    s.label = std::move(label);
    s.points.reserve(traj.size());
    for (const auto& sample : traj) {
        s.points.emplace_back(sample.amps.t, sample_value(sample, column));
    }
    return s;
}

int cmd_evolve(const CLI::App& cmd, const RunOptions& opt, const std::string& out,
               bool plot) {
    const RunConfig config = build_run_config(cmd, opt);
    const Trajectory traj = evolve(config);
    write_csv(traj, out, config.outputs);
    if (plot) {
        std::vector<Series> series;
        for (const auto& column : plot_columns(config)) {
            series.push_back(series_of(traj, column, column));
        }
        PlotStyle style;
        style.title = fs::path(out).stem().string();
        write_svg_plot(series, style, fs::path(out).replace_extension(".svg"));
    }
    std::cout << out << ": " << traj.size() << " rows\n";
    return kExitOk;
}

int cmd_sweep(const CLI::App& cmd, const RunOptions& opt,
              const std::vector<std::string>& axis_specs, const std::string& out_prefix,
              bool plot) {
    const RunConfig base = build_run_config(cmd, opt);
    std::vector<SweepAxis> axes;
    for (const auto& spec : axis_specs) {
        const std::size_t eq = spec.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 >= spec.size()) {
            throw std::invalid_argument("--axis expects name=v1,v2,... got '" + spec + "'");
        }
        axes.push_back({spec.substr(0, eq), parse_number_list(spec.substr(eq + 1))});
    }
    const auto runs = sweep(base, axes);
    for (const auto& run : runs) {
        const std::string name =
            run.label.empty() ? out_prefix + ".csv" : out_prefix + "_" + run.label + ".csv";
        write_csv(run.trajectory, name, run.config.outputs);
        std::cout << name << ": " << run.trajectory.size() << " rows\n";
    }
    if (plot) {
        for (const auto& column : plot_columns(base)) {
            std::vector<Series> series;
            for (const auto& run : runs) {
                series.push_back(series_of(run.trajectory, column,
                                           run.label.empty() ? column : run.label));
            }
            PlotStyle style;
            style.title = column;
            style.y_label = column;
            write_svg_plot(series, style, out_prefix + "_" + column + ".svg");
        }
    }
    return kExitOk;
}

int cmd_figure(const std::string& name, const std::string& outdir) {
    const FigureBundle bundle = figure(parse_figure_id(name));
    const fs::path dir(outdir.empty() ? "." : outdir);
    fs::create_directories(dir);
    for (const auto& run : bundle.runs) {
        const fs::path path = dir / (name + "_" + run.label + ".csv");
        write_csv(run.trajectory, path, run.config.outputs);
        std::cout << path.string() << ": " << run.trajectory.size() << " rows\n";
    }
    // One chart per observable panel; fig8 keeps one panel per detuning.
    for (const auto& column : bundle.panels) {
        std::map<std::string, std::vector<const LabelledRun*>> panels;
        for (const auto& run : bundle.runs) {
            std::string key;
            if (bundle.id == FigureId::fig8) {
                key = run.label.substr(0, run.label.find('_'));
            }
            panels[key].push_back(&run);
        }
        for (const auto& [key, runs] : panels) {
            std::vector<Series> series;
            for (const LabelledRun* run : runs) {
                series.push_back(series_of(run->trajectory, column, run->label));
            }
            PlotStyle style;
            style.title = name + (key.empty() ? "" : " " + key) + ": " + column;
            style.y_label = column;
            const std::string file =
                name + (key.empty() ? "" : "_" + key) + "_" + column + ".svg";
            write_svg_plot(series, style, dir / file);
            std::cout << (dir / file).string() << '\n';
        }
    }
    return kExitOk;
}

int cmd_verify(double dt, std::size_t samples, std::uint64_t seed) {
    const auto report = oracle::run_verification(dt, samples, seed);
    for (const auto& check : report.checks) {
        std::printf("[%s] %-45s measured %.3e  bound %.3e%s%s\n",
                    check.pass ? "PASS" : "FAIL", check.name.c_str(), check.value,
                    check.threshold, check.detail.empty() ? "" : "  ",
                    check.detail.c_str());
    }
    return report.all_pass() ? kExitOk : kExitFailure;
}

int cmd_bound_search(std::size_t samples, std::uint64_t seed) {
    const auto result = oracle::bound_search(samples, seed);
    constexpr double floor = 1.3862943611198906;  // 2 ln 2
    std::printf("min entropy sum  %.12f\n", result.min_sum);
    std::printf("above 2 ln 2 by  %.3e\n", result.min_sum - floor);
    const auto& a = result.argmin;
    std::printf("argmin amplitudes  dA=(%.6f,%.6f) dB=(%.6f,%.6f) dC=(%.6f,%.6f)\n",
                a.dA.real(), a.dA.imag(), a.dB.real(), a.dB.imag(), a.dC.real(), a.dC.imag());
    if (result.min_sum < floor - 1e-6) {
        std::fprintf(stderr, "bound violated: %.12f < 2 ln 2\n", result.min_sum);
        return kExitFailure;
    }
    return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    std::setlocale(LC_NUMERIC, "C");
    CLI::App app{"Closed-form dynamics and squeezing diagnostics of a three-level atom in "
                 "a leaky cavity"};
    app.require_subcommand(1);

    RunOptions evolve_opt;
    std::string evolve_out = "evolve.csv";
    bool evolve_plot = false;
    CLI::App* evolve_cmd = app.add_subcommand("evolve", "Evaluate one trajectory to CSV");
    add_run_options(*evolve_cmd, evolve_opt);
    evolve_cmd->add_option("--out", evolve_out, "Output CSV path");
    evolve_cmd->add_flag("--plot", evolve_plot, "Also write an SVG chart next to the CSV");

    RunOptions sweep_opt;
    std::string sweep_out = "sweep";
    bool sweep_plot = false;
    std::vector<std::string> axis_specs;
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "Cartesian parameter sweep to CSV files");
    add_run_options(*sweep_cmd, sweep_opt);
    sweep_cmd->add_option("--axis", axis_specs,
                          "Sweep axis name=v1,v2,... (theta, gamma0, delta, alpha, beta); "
                          "repeatable");
    sweep_cmd->add_option("--out", sweep_out, "Output file prefix");
    sweep_cmd->add_flag("--plot", sweep_plot, "Write one SVG per observable");

    std::string figure_id;
    std::string figure_outdir = ".";
    CLI::App* figure_cmd =
        app.add_subcommand("figure", "Emit the CSVs and SVG panels of a preset study");
    figure_cmd->add_option("id", figure_id, "fig1..fig8")->required();
    figure_cmd->add_option("--outdir", figure_outdir, "Output directory");

    double verify_dt = 1e-3;
    std::size_t verify_samples = 100000;
    std::uint64_t verify_seed = 20240901;
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "Run the independent oracle suite; exit 0 iff all pass");
    verify_cmd->add_option("--dt", verify_dt, "Integrator step");
    verify_cmd->add_option("--samples", verify_samples, "Bound-search sample count");
    verify_cmd->add_option("--seed", verify_seed, "Random seed");

    std::size_t search_samples = 100000;
    std::uint64_t search_seed = 1;
    CLI::App* search_cmd = app.add_subcommand(
        "bound-search", "Minimize the three-axis entropy sum over random pure states");
    search_cmd->add_option("--samples", search_samples, "Sample count");
    search_cmd->add_option("--seed", search_seed, "Random seed");

    try {
        app.parse(argc, argv);
        if (evolve_cmd->parsed()) {
            return cmd_evolve(*evolve_cmd, evolve_opt, evolve_out, evolve_plot);
        }
        if (sweep_cmd->parsed()) {
            return cmd_sweep(*sweep_cmd, sweep_opt, axis_specs, sweep_out, sweep_plot);
        }
        if (figure_cmd->parsed()) {
            return cmd_figure(figure_id, figure_outdir);
        }
        if (verify_cmd->parsed()) {
            return cmd_verify(verify_dt, verify_samples, verify_seed);
        }
        if (search_cmd->parsed()) {
            return cmd_bound_search(search_samples, search_seed);
        }
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const UnknownFigure& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UnknownParameter& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }
}

}  // namespace vatom
