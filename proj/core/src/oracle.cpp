#include "vatom/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <stdexcept>

#include "vatom/errors.hpp"
#include "vatom/runner.hpp"
#include "vatom/squeezing.hpp"
#include "vatom/state.hpp"

namespace vatom::oracle {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kTwoLn2 = 1.3862943611198906;

struct ModeState {
    Complex d;  // atomic channel amplitude
    Complex c;  // damped-mode amplitude
};

ModeState derivative(const ModeState& u, double g, Complex kid) {
    return {-kI * g * u.c, -kid * u.c - kI * g * u.d};
}

ModeState axpy(const ModeState& u, double h, const ModeState& k) {
    return {u.d + h * k.d, u.c + h * k.c};
}

double coupling_g(const SystemParams& p, Sign sign) {
    const double channel = 1.0 + sign_value(sign) * p.theta;
    return std::sqrt(0.5 * p.gamma0 * channel * p.kappa);
}

// Distinct (kappa, gamma0, theta, delta) combinations used by the figure
// presets; the kappa = 1 scaling is baked into them.
std::vector<SystemParams> figure_parameter_sets() {
    std::vector<SystemParams> sets;
    auto add = [&sets](double gamma0, double theta, double delta) {
        for (const auto& s : sets) {
            if (s.gamma0 == gamma0 && s.theta == theta && s.delta == delta) {
                return;
            }
        }
        sets.emplace_back(1.0, gamma0, theta, delta);
    };
    for (FigureId id : {FigureId::fig1, FigureId::fig2, FigureId::fig3, FigureId::fig4,
                        FigureId::fig5, FigureId::fig6, FigureId::fig7, FigureId::fig8}) {
        for (const auto& run : figure_configs(id)) {
            add(run.config.params.gamma0, run.config.params.theta, run.config.params.delta);
        }
    }
    return sets;
}

double max_ode_deviation(const SystemParams& p, Sign sign, double dt, double t_max) {
    const OdeConfig grid(dt, t_max);
    const auto numeric = ode_propagator(p, sign, grid);
    double worst = 0.0;
    for (std::size_t i = 0; i < numeric.size(); ++i) {
        const double t = static_cast<double>(i) * dt;
        worst = std::max(worst, std::abs(numeric[i] - propagator_g(p, sign, t)));
    }
    return worst;
}

AmplitudeSet random_reachable_state(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    const SystemParams params(0.2 + 2.8 * u01(rng), 15.0 * u01(rng), 2.0 * u01(rng) - 1.0,
                              16.0 * u01(rng) - 8.0);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const InitialAmplitudes init = InitialAmplitudes::normalized(
        Complex(gauss(rng), gauss(rng)), Complex(gauss(rng), gauss(rng)),
        Complex(gauss(rng), gauss(rng)));
    return evolve_amplitudes(params, init, 25.0 * u01(rng));
}

double entropy_route_deviation(const AmplitudeSet& a) {
    const DensityMatrix3 rho = density_matrix(a);
    double worst = 0.0;
    for (SpinAxis axis : {SpinAxis::X, SpinAxis::Y, SpinAxis::Z}) {
        const double closed = entropy(a, axis);
        const double projected = shannon_entropy(projection_probabilities(rho, axis));
        worst = std::max(worst, std::abs(closed - projected));
    }
    return worst;
}

}  // namespace

OdeConfig::OdeConfig(double dt_, double t_max_) : dt(dt_), t_max(t_max_) {
    if (!(dt > 0.0)) {
        throw std::invalid_argument("OdeConfig: dt must be positive");
    }
    if (dt > t_max) {
        throw std::invalid_argument("OdeConfig: dt exceeds t_max");
    }
}

std::size_t OdeConfig::steps() const {
    return static_cast<std::size_t>(std::llround(t_max / dt));
}

std::vector<Complex> ode_propagator(const SystemParams& p, Sign sign, const OdeConfig& grid) {
    const double g = coupling_g(p, sign);
    if (grid.dt * (p.kappa + std::abs(p.delta) + g) > 0.1) {
        throw StepTooLarge("ode_propagator: dt * (kappa + |delta| + g) = " +
                           std::to_string(grid.dt * (p.kappa + std::abs(p.delta) + g)));
    }
    const Complex kid(p.kappa, p.delta);
    const double h = grid.dt;
    const std::size_t n = grid.steps();

    std::vector<Complex> out;
    out.reserve(n + 1);
    ModeState u{Complex(1.0, 0.0), Complex(0.0, 0.0)};
    out.push_back(u.d);
    for (std::size_t i = 0; i < n; ++i) {
        const ModeState k1 = derivative(u, g, kid);
        const ModeState k2 = derivative(axpy(u, 0.5 * h, k1), g, kid);
        const ModeState k3 = derivative(axpy(u, 0.5 * h, k2), g, kid);
        const ModeState k4 = derivative(axpy(u, h, k3), g, kid);
        u.d += (h / 6.0) * (k1.d + 2.0 * k2.d + 2.0 * k3.d + k4.d);
        u.c += (h / 6.0) * (k1.c + 2.0 * k2.c + 2.0 * k3.c + k4.c);
        out.push_back(u.d);
    }
    return out;
}

ProbabilityTriple projection_probabilities(const DensityMatrix3& rho, SpinAxis axis) {
    // <v| rho |v> written out against the literal eigenvector components.
    const auto& m = rho.m;
    auto bracket = [&m](Complex v0, Complex v1, Complex v2) {
        Complex acc = 0.0;
        const Complex v[3] = {v0, v1, v2};
        for (int r = 0; r < 3; ++r) {
            for (int c = 0; c < 3; ++c) {
                acc += std::conj(v[r]) * m(r, c) * v[c];
            }
        }
        return acc.real();
    };
    const double s = 1.0 / std::sqrt(2.0);
    switch (axis) {
        case SpinAxis::X:
            return {bracket(0.0, -kI * s, s), bracket(1.0, 0.0, 0.0), bracket(0.0, kI * s, s)};
        case SpinAxis::Y:
            return {bracket(s, 0.0, -kI * s), bracket(0.0, 1.0, 0.0), bracket(s, 0.0, kI * s)};
        case SpinAxis::Z:
            return {bracket(s, kI * s, 0.0), bracket(0.0, 0.0, 1.0), bracket(s, -kI * s, 0.0)};
    }
    throw std::invalid_argument("projection_probabilities: bad axis");
}

BoundSearchResult bound_search(std::size_t samples, std::uint64_t seed) {
    if (samples < 1) {
        throw std::invalid_argument("bound_search: samples must be >= 1");
    }
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);

    BoundSearchResult best;
    best.min_sum = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < samples; ++i) {
        const Complex a(gauss(rng), gauss(rng));
        const Complex b(gauss(rng), gauss(rng));
        const Complex c(gauss(rng), gauss(rng));
        const double norm = std::sqrt(std::norm(a) + std::norm(b) + std::norm(c));
        const AmplitudeSet state =
            AmplitudeSet::from_amplitudes(0.0, a / norm, b / norm, c / norm);
        const double sum = entropy_sum(state);
        if (sum < best.min_sum) {
            best.min_sum = sum;
            best.argmin = state;
        }
    }
    return best;
}

bool VerificationReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.pass; });
}

VerificationReport run_verification(double ode_dt, std::size_t bound_samples,
                                    std::uint64_t seed) {
    VerificationReport report;
    const auto params_sets = figure_parameter_sets();

    // Closed-form propagator against the damped-mode integration.
    double worst_err = 0.0;
    std::string worst_label;
    for (const auto& p : params_sets) {
        for (Sign sign : {Sign::plus, Sign::minus}) {
            const double err = max_ode_deviation(p, sign, ode_dt, 20.0);
            if (err > worst_err) {
                worst_err = err;
                worst_label = "gamma0=" + std::to_string(p.gamma0) +
                              " theta=" + std::to_string(p.theta) +
                              " delta=" + std::to_string(p.delta) +
                              (sign == Sign::plus ? " sign=+" : " sign=-");
            }
        }
    }
    report.checks.push_back({"ode propagator max |closed - integrated|", worst_err, 1e-6,
                             worst_err < 1e-6, worst_label});

    // Fourth-order step refinement on the worst parameter set.
    {
        double coarse = 0.0;
        double fine = 0.0;
        for (const auto& p : params_sets) {
            for (Sign sign : {Sign::plus, Sign::minus}) {
                coarse = std::max(coarse, max_ode_deviation(p, sign, ode_dt, 20.0));
                fine = std::max(fine, max_ode_deviation(p, sign, 0.5 * ode_dt, 20.0));
            }
        }
        const double gain = fine > 0.0 ? coarse / fine : std::numeric_limits<double>::infinity();
        char detail[64];
        std::snprintf(detail, sizeof(detail), "coarse max %.3e", coarse);
        report.checks.push_back({"ode step-halving error gain", gain, 12.0, gain >= 12.0,
                                 detail});
    }

    // Closed-form entropies against literal projections, random reachable states.
    {
        std::mt19937_64 rng(seed);
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
            worst = std::max(worst, entropy_route_deviation(random_reachable_state(rng)));
        }
        report.checks.push_back({"entropy routes on random reachable states", worst, 1e-12,
                                 worst < 1e-12, "1000 seeded draws"});
    }

    // Same equivalence along every figure trajectory.
    {
        double worst = 0.0;
        for (FigureId id : {FigureId::fig1, FigureId::fig2, FigureId::fig3, FigureId::fig4,
                            FigureId::fig5, FigureId::fig6, FigureId::fig7}) {
            for (const auto& run : figure(id).runs) {
                for (const auto& sample : run.trajectory) {
                    worst = std::max(worst, entropy_route_deviation(sample.amps));
                }
            }
        }
        report.checks.push_back(
            {"entropy routes on figure trajectories", worst, 1e-12, worst < 1e-12, ""});
    }

    // Tightness of the entropy-sum bound over random pure states. The
    // minimum must never undercut 2 ln 2 and should approach it from above.
    // The approach distance of a uniform search shrinks like 1/sqrt(samples)
    // (the basin measure around a minimizing state grows quadratically in
    // the excess), so the ceiling is 5e-2 at 1e5 samples and scales with
    // smaller budgets.
    {
        const BoundSearchResult found = bound_search(bound_samples, seed);
        const double ceiling =
            5e-2 * std::sqrt(1e5 / static_cast<double>(std::max<std::size_t>(bound_samples, 1)));
        const bool pass =
            found.min_sum >= kTwoLn2 - 1e-6 && found.min_sum <= kTwoLn2 + ceiling;
        report.checks.push_back({"entropy-sum bound search min - 2ln2",
                                 found.min_sum - kTwoLn2, ceiling, pass,
                                 std::to_string(bound_samples) + " samples"});
    }

    return report;
}

}  // namespace vatom::oracle
