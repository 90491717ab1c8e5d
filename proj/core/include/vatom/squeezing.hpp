#pragma once

#include <utility>

#include "vatom/model.hpp"
#include "vatom/spin.hpp"

namespace vatom {

/// One time sample of every reported observable. Entropies are in nats.
struct SqueezingRecord {
    double t = 0.0;
    double e_sx = 0.0;         // entropy squeezing factor E(S_x)
    double e_sy = 0.0;         // entropy squeezing factor E(S_y)
    double v_sx = 0.0;         // variance squeezing factor V(S_x)
    double v_sy = 0.0;         // variance squeezing factor V(S_y)
    double h_sx = 0.0;         // H(S_x)
    double h_sy = 0.0;         // H(S_y)
    double h_sz = 0.0;         // H(S_z)
    double d_sx = 0.0;         // standard deviation of S_x
    double d_sy = 0.0;         // standard deviation of S_y
    double sz_expect = 0.0;    // atomic inversion <S_z>
    double entropy_sum = 0.0;  // H(S_x) + H(S_y) + H(S_z)
    double coherence = 0.0;    // l1-norm coherence of rho(t)
};

/// Hard floor of the entropy squeezing factor: 1 - e/sqrt(2).
inline constexpr double kEntropyFactorFloor = -0.92211551407955827;

/// Lower bound of the three-axis entropy sum, 2 ln 2. The inequality is
/// stated per bit; entropies here are in nats, so the saturating value of
/// the ground state is 2 ln 2 rather than 2.
inline constexpr double kEntropySumFloor = 1.3862943611198906;

/// Standard deviation of S_axis (X or Y) from the closed-form moments.
/// A radicand in (-1e-9, 0) clamps to zero; below that throws NegativeRadicand.
double std_dev(const AmplitudeSet& a, SpinAxis axis);

/// V(S_axis) = dS_axis - sqrt(|<S_z>|/2); negative certifies variance squeezing.
double variance_factor(const AmplitudeSet& a, SpinAxis axis);

/// -sum p ln p in nats with 0 ln 0 = 0; result lies in [0, ln 3].
double shannon_entropy(const ProbabilityTriple& probs);

/// Closed-form H(S_axis) evaluated directly from the amplitudes.
double entropy(const AmplitudeSet& a, SpinAxis axis);

/// E = exp(h_axis) - e / sqrt(exp(h_z)).
double entropy_factor(double h_axis, double h_z);

/// Entropy squeezing factor for X or Y; negative certifies entropy squeezing.
double entropy_factor(const AmplitudeSet& a, SpinAxis axis);

/// (dS_x * dS_y, |<S_z>|/2); physical states satisfy lhs >= rhs.
std::pair<double, double> heisenberg_check(const AmplitudeSet& a);

double entropy_sum(const AmplitudeSet& a);

/// Full observable sample at a.t, composing state, spin and squeezing.
SqueezingRecord make_record(const AmplitudeSet& a);

}  // namespace vatom
