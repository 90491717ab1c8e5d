#include "vatom/squeezing.hpp"

#include <cmath>
#include <string>

#include "vatom/errors.hpp"
#include "vatom/state.hpp"

namespace vatom {

namespace {

constexpr double kLn3 = 1.0986122886681098;

// 0 ln 0 = 0; rounding residue in [-1e-9, 0) counts as 0.
double p_log_p(double p) {
    if (p <= 0.0) {
        return 0.0;
    }
    return p * std::log(p);
}

double clamp_probability(double p) { return p > 0.0 ? p : 0.0; }

double entropy_of(double p_plus, double p_zero, double p_minus) {
    const double h = -(p_log_p(clamp_probability(p_plus)) + p_log_p(clamp_probability(p_zero)) +
                       p_log_p(clamp_probability(p_minus)));
    return std::clamp(h, 0.0, kLn3);
}

}  // namespace

double std_dev(const AmplitudeSet& a, SpinAxis axis) {
    double radicand;
    if (axis == SpinAxis::X) {
        const Complex cross = a.dB * std::conj(a.dA);
        radicand = std::norm(a.dA) + std::norm(a.dB) - 2.0 * std::norm(a.dA) * std::norm(a.dB) +
                   2.0 * (cross * cross).real();
    } else if (axis == SpinAxis::Y) {
        const Complex cross = a.dA * std::conj(a.dC);
        radicand = 1.0 - std::norm(a.dB) - 2.0 * std::norm(a.dC) * std::norm(a.dA) +
                   2.0 * (cross * cross).real();
    } else {
        throw std::invalid_argument("std_dev: defined for X and Y only");
    }
    if (radicand < -1e-9) {
        throw NegativeRadicand("std_dev: radicand " + std::to_string(radicand));
    }
    return std::sqrt(std::max(radicand, 0.0));
}

double variance_factor(const AmplitudeSet& a, SpinAxis axis) {
    return std_dev(a, axis) - std::sqrt(0.5 * std::abs(expectation(a, SpinAxis::Z)));
}

double shannon_entropy(const ProbabilityTriple& probs) {
    const double kNegTol = -1e-12;
    if (probs.plus < kNegTol || probs.zero < kNegTol || probs.minus < kNegTol) {
        throw InvalidDistribution("shannon_entropy: negative probability");
    }
    if (std::abs(probs.sum() - 1.0) > 1e-9) {
        throw InvalidDistribution("shannon_entropy: probabilities sum to " +
                                  std::to_string(probs.sum()));
    }
    return entropy_of(probs.plus, probs.zero, probs.minus);
}

double entropy(const AmplitudeSet& a, SpinAxis axis) {
    const double nA = std::norm(a.dA);
    const double nB = std::norm(a.dB);
    switch (axis) {
        case SpinAxis::X: {
            const double mean = expectation(a, SpinAxis::X);
            return entropy_of(0.5 * (nB + nA) + 0.5 * mean, 1.0 - nB - nA,
                              0.5 * (nB + nA) - 0.5 * mean);
        }
        case SpinAxis::Y: {
            const double mean = expectation(a, SpinAxis::Y);
            return entropy_of(0.5 - 0.5 * nB + 0.5 * mean, nB, 0.5 - 0.5 * nB - 0.5 * mean);
        }
        case SpinAxis::Z: {
            const double mean = expectation(a, SpinAxis::Z);
            return entropy_of(0.5 - 0.5 * nA + 0.5 * mean, nA, 0.5 - 0.5 * nA - 0.5 * mean);
        }
    }
    throw std::invalid_argument("entropy: bad axis");
}

double entropy_factor(double h_axis, double h_z) {
    constexpr double e = 2.718281828459045235360287;
    return std::exp(h_axis) - e / std::sqrt(std::exp(h_z));
}

double entropy_factor(const AmplitudeSet& a, SpinAxis axis) {
    if (axis == SpinAxis::Z) {
        throw std::invalid_argument("entropy_factor: reported for X and Y only");
    }
    return entropy_factor(entropy(a, axis), entropy(a, SpinAxis::Z));
}

std::pair<double, double> heisenberg_check(const AmplitudeSet& a) {
    const double lhs = std_dev(a, SpinAxis::X) * std_dev(a, SpinAxis::Y);
    const double rhs = 0.5 * std::abs(expectation(a, SpinAxis::Z));
    return {lhs, rhs};
}

double entropy_sum(const AmplitudeSet& a) {
    return entropy(a, SpinAxis::X) + entropy(a, SpinAxis::Y) + entropy(a, SpinAxis::Z);
}

SqueezingRecord make_record(const AmplitudeSet& a) {
    SqueezingRecord rec;
    rec.t = a.t;
    rec.h_sx = entropy(a, SpinAxis::X);
    rec.h_sy = entropy(a, SpinAxis::Y);
    rec.h_sz = entropy(a, SpinAxis::Z);
    rec.e_sx = entropy_factor(rec.h_sx, rec.h_sz);
    rec.e_sy = entropy_factor(rec.h_sy, rec.h_sz);
    rec.d_sx = std_dev(a, SpinAxis::X);
    rec.d_sy = std_dev(a, SpinAxis::Y);
    rec.sz_expect = expectation(a, SpinAxis::Z);
    const double uncertainty_bound = std::sqrt(0.5 * std::abs(rec.sz_expect));
    rec.v_sx = rec.d_sx - uncertainty_bound;
    rec.v_sy = rec.d_sy - uncertainty_bound;
    rec.entropy_sum = rec.h_sx + rec.h_sy + rec.h_sz;
    rec.coherence = l1_coherence(density_matrix(a));
    return rec;
}

}  // namespace vatom
