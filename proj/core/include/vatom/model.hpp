#pragma once

#include <complex>
#include <utility>

namespace vatom {

using Complex = std::complex<double>;

/// Sign of the symmetric/antisymmetric amplitude channel.
enum class Sign { plus, minus };

inline double sign_value(Sign s) { return s == Sign::plus ? 1.0 : -1.0; }

/// Physical constants of one run. Time is measured in units of 1/kappa;
/// kappa stays a free parameter so other unit systems remain expressible.
struct SystemParams {
    double kappa;   // spectral width of the cavity-environment coupling, > 0
    double gamma0;  // excited-state decay coefficient, >= 0
    double theta;   // dipole-interference parameter, in [-1, 1]
    double delta;   // atom-cavity detuning

    SystemParams(double kappa, double gamma0, double theta, double delta);

    /// Weak-coupling (memoryless) regime classification: kappa >= 2*gamma0.
    bool markovian() const { return kappa >= 2.0 * gamma0; }
};

/// Normalized complex amplitudes of the initial atomic state on (|A>, |B>, |C>).
struct InitialAmplitudes {
    Complex dA;
    Complex dB;
    Complex dC;

    InitialAmplitudes(Complex a, Complex b, Complex c);

    /// Rescales an arbitrary nonzero triple onto the unit sphere.
    static InitialAmplitudes normalized(Complex a, Complex b, Complex c);
};

/// Time-stamped amplitude triple plus the aggregate weight that has leaked
/// into the environment, bath_weight = 1 - |dA|^2 - |dB|^2 - |dC|^2.
struct AmplitudeSet {
    double t = 0.0;
    Complex dA;
    Complex dB;
    Complex dC;
    double bath_weight = 0.0;

    /// Builds the set from amplitudes, deriving bath_weight. Values in
    /// [-1e-9, 0) clamp to zero; anything below that signals an upstream bug.
    static AmplitudeSet from_amplitudes(double t, Complex a, Complex b, Complex c);

    double atomic_norm() const {
        return std::norm(dA) + std::norm(dB) + std::norm(dC);
    }
};

/// Which level carries the cos(beta) weight in the angle parametrization.
enum class AngleConvention {
    beta_on_c,  // (cos a, sin a sin b, sin a cos b) on (dA, dB, dC)
    beta_on_b,  // (cos a, sin a cos b, sin a sin b)
};

enum class Preset { S1, S2 };

/// Decay rate R(sign) = sqrt((kappa + i*delta)^2 - 2*gamma0*(1 +/- theta)*kappa),
/// principal branch. Either branch yields the same propagator; the principal
/// one keeps logged values deterministic.
Complex rate_r(const SystemParams& p, Sign sign);

/// Channel propagator G(sign, t) with the removable R -> 0 singularity
/// handled through sinhc(z) = sinh(z)/z.
Complex propagator_g(const SystemParams& p, Sign sign, double t);

/// (Q1, Q2) = ((G+ + G-)/2, (G+ - G-)/2).
std::pair<Complex, Complex> q_factors(const SystemParams& p, double t);

/// Closed-form amplitudes at time t:
///   dA(t) = Q1 dA(0) + Q2 dB(0), dB(t) = Q2 dA(0) + Q1 dB(0), dC(t) = dC(0).
AmplitudeSet evolve_amplitudes(const SystemParams& p, const InitialAmplitudes& init, double t);

InitialAmplitudes amplitudes_from_angles(double alpha, double beta, AngleConvention conv);

/// S1 = (1/sqrt2, 0, 1/sqrt2); S2 = angles (pi/2.5, pi/10) with beta_on_c.
InitialAmplitudes preset_amplitudes(Preset preset);

namespace detail {

/// sinh(z)/z with a short power series below |z| = 1e-2 so that R = 0 is exact.
Complex sinhc(Complex z);

/// Propagator evaluated from an explicit rate; lets callers probe both
/// square-root branches.
Complex propagator_from_rate(Complex kappa_plus_i_delta, Complex rate, double t);

}  // namespace detail

}  // namespace vatom
