#pragma once

#include <Eigen/Dense>

#include "vatom/model.hpp"
#include "vatom/state.hpp"

namespace vatom {

enum class SpinAxis { X, Y, Z };

/// Eigenvectors in basis order [C, B, A], labelled by outcome.
struct SpinEigenbasis {
    Eigen::Vector3cd plus;   // outcome +1
    Eigen::Vector3cd zero;   // outcome  0
    Eigen::Vector3cd minus;  // outcome -1
};

/// Measurement distribution over outcomes (+1, 0, -1).
struct ProbabilityTriple {
    double plus = 0.0;
    double zero = 0.0;
    double minus = 0.0;

    double sum() const { return plus + zero + minus; }
};

/// Spin-1 component matrix in basis [C, B, A].
const Eigen::Matrix3cd& spin_operator(SpinAxis axis);

const SpinEigenbasis& eigenbasis(SpinAxis axis);

/// Closed-form first moment <S_axis>; the imaginary residue is discarded.
double expectation(const AmplitudeSet& a, SpinAxis axis);

/// Closed-form second moment; defined for X and Y only.
double second_moment(const AmplitudeSet& a, SpinAxis axis);

/// Projection probabilities onto eigenbasis(axis), clamped to [0, 1] and
/// renormalized when the sum drifts past 1e-12. Drift beyond 1e-9 throws
/// NonUnitProbability, signalling an invalid rho upstream.
ProbabilityTriple probabilities(const DensityMatrix3& rho, SpinAxis axis);

}  // namespace vatom
