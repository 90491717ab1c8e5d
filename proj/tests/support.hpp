#pragma once

#include <complex>
#include <random>

#include <Eigen/Dense>

#include "vatom/model.hpp"
#include "vatom/spin.hpp"
#include "vatom/state.hpp"

// Shared generators and independent reference computations for the test
// suites. Everything here is deliberately written against the raw matrices
// rather than the closed forms under test.

namespace vatom::testing {

inline std::mt19937_64 seeded_rng(std::uint64_t salt = 0) {
    return std::mt19937_64(0x5eed0000u + salt);
}

inline SystemParams random_params(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    return SystemParams(0.1 + 4.9 * u(rng), 20.0 * u(rng), 2.0 * u(rng) - 1.0,
                        20.0 * u(rng) - 10.0);
}

inline InitialAmplitudes random_initial(std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    return InitialAmplitudes::normalized(Complex(g(rng), g(rng)), Complex(g(rng), g(rng)),
                                         Complex(g(rng), g(rng)));
}

/// Amplitudes evolved to a random time from random parameters: the states the
/// library can actually reach.
inline AmplitudeSet random_reachable(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const SystemParams p = random_params(rng);
    return evolve_amplitudes(p, random_initial(rng), 30.0 * u(rng));
}

/// Pure atomic state with an explicit bath share; also only reachable-shaped.
inline AmplitudeSet random_pure_with_bath(std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    const Complex a(g(rng), g(rng));
    const Complex b(g(rng), g(rng));
    const Complex c(g(rng), g(rng));
    const Complex leak(g(rng), g(rng));
    const double norm =
        std::sqrt(std::norm(a) + std::norm(b) + std::norm(c) + std::norm(leak));
    return AmplitudeSet::from_amplitudes(0.0, a / norm, b / norm, c / norm);
}

/// Reference first moment via the literal trace Tr(rho S).
inline double trace_expectation(const AmplitudeSet& a, SpinAxis axis) {
    return (density_matrix(a).m * spin_operator(axis)).trace().real();
}

/// Reference second moment via Tr(rho S^2).
inline double trace_second_moment(const AmplitudeSet& a, SpinAxis axis) {
    const Eigen::Matrix3cd s = spin_operator(axis);
    return (density_matrix(a).m * s * s).trace().real();
}

}  // namespace vatom::testing
