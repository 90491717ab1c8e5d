#include "vatom/spin.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "vatom/errors.hpp"

namespace vatom {

namespace {

constexpr Complex kI{0.0, 1.0};

Eigen::Matrix3cd make_spin_x() {
    Eigen::Matrix3cd s = Eigen::Matrix3cd::Zero();
    s(1, 2) = -kI;
    s(2, 1) = kI;
    return s;
}

Eigen::Matrix3cd make_spin_y() {
    Eigen::Matrix3cd s = Eigen::Matrix3cd::Zero();
    s(0, 2) = kI;
    s(2, 0) = -kI;
    return s;
}

Eigen::Matrix3cd make_spin_z() {
    Eigen::Matrix3cd s = Eigen::Matrix3cd::Zero();
    s(0, 1) = -kI;
    s(1, 0) = kI;
    return s;
}

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

SpinEigenbasis make_basis_x() {
    SpinEigenbasis b;
    b.plus << 0.0, -kI * kInvSqrt2, kInvSqrt2;
    b.zero << 1.0, 0.0, 0.0;
    b.minus << 0.0, kI * kInvSqrt2, kInvSqrt2;
    return b;
}

SpinEigenbasis make_basis_y() {
    SpinEigenbasis b;
    b.plus << kInvSqrt2, 0.0, -kI * kInvSqrt2;
    b.zero << 0.0, 1.0, 0.0;
    b.minus << kInvSqrt2, 0.0, kI * kInvSqrt2;
    return b;
}

SpinEigenbasis make_basis_z() {
    SpinEigenbasis b;
    b.plus << kInvSqrt2, kI * kInvSqrt2, 0.0;
    b.zero << 0.0, 0.0, 1.0;
    b.minus << kInvSqrt2, -kI * kInvSqrt2, 0.0;
    return b;
}

double quadratic_form(const Eigen::Vector3cd& v, const Eigen::Matrix3cd& m) {
    return (v.adjoint() * m * v)(0, 0).real();
}

}  // namespace

const Eigen::Matrix3cd& spin_operator(SpinAxis axis) {
    static const Eigen::Matrix3cd sx = make_spin_x();
    static const Eigen::Matrix3cd sy = make_spin_y();
    static const Eigen::Matrix3cd sz = make_spin_z();
    switch (axis) {
        case SpinAxis::X: return sx;
        case SpinAxis::Y: return sy;
        case SpinAxis::Z: return sz;
    }
    throw std::invalid_argument("spin_operator: bad axis");
}

const SpinEigenbasis& eigenbasis(SpinAxis axis) {
    static const SpinEigenbasis bx = make_basis_x();
    static const SpinEigenbasis by = make_basis_y();
    static const SpinEigenbasis bz = make_basis_z();
    switch (axis) {
        case SpinAxis::X: return bx;
        case SpinAxis::Y: return by;
        case SpinAxis::Z: return bz;
    }
    throw std::invalid_argument("eigenbasis: bad axis");
}

double expectation(const AmplitudeSet& a, SpinAxis axis) {
    Complex value;
    switch (axis) {
        case SpinAxis::X:
            value = kI * a.dB * std::conj(a.dA) - kI * a.dA * std::conj(a.dB);
            break;
        case SpinAxis::Y:
            value = kI * a.dA * std::conj(a.dC) - kI * a.dC * std::conj(a.dA);
            break;
        case SpinAxis::Z:
            value = kI * a.dC * std::conj(a.dB) - kI * a.dB * std::conj(a.dC);
            break;
    }
    return value.real();
}

double second_moment(const AmplitudeSet& a, SpinAxis axis) {
    switch (axis) {
        case SpinAxis::X:
            return std::norm(a.dB) + std::norm(a.dA);
        case SpinAxis::Y:
            return 1.0 - std::norm(a.dB);
        case SpinAxis::Z:
            break;
    }
    throw std::invalid_argument("second_moment: defined for X and Y only");
}

ProbabilityTriple probabilities(const DensityMatrix3& rho, SpinAxis axis) {
    const SpinEigenbasis& basis = eigenbasis(axis);
    // Drift is judged on the raw quadratic forms; clamping first would mask
    // an invalid rho.
    const double raw_plus = quadratic_form(basis.plus, rho.m);
    const double raw_zero = quadratic_form(basis.zero, rho.m);
    const double raw_minus = quadratic_form(basis.minus, rho.m);
    const double total = raw_plus + raw_zero + raw_minus;
    const double drift = std::abs(total - 1.0);
    if (drift > 1e-9) {
        throw NonUnitProbability("probabilities: outcome sum " + std::to_string(total) +
                                 " deviates from 1 beyond 1e-9");
    }
    ProbabilityTriple p;
    p.plus = std::clamp(raw_plus, 0.0, 1.0);
    p.zero = std::clamp(raw_zero, 0.0, 1.0);
    p.minus = std::clamp(raw_minus, 0.0, 1.0);
    if (drift > 1e-12) {
        const double sum = p.sum();
        p.plus /= sum;
        p.zero /= sum;
        p.minus /= sum;
    }
    return p;
}

}  // namespace vatom
