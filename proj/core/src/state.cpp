#include "vatom/state.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace vatom {

double DensityMatrix3::trace_deviation() const {
    return std::abs(m.trace() - Complex(1.0, 0.0));
}

double DensityMatrix3::hermiticity_error() const {
    double worst = 0.0;
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
            worst = std::max(worst, std::abs(m(r, c) - std::conj(m(c, r))));
        }
    }
    return worst;
}

double DensityMatrix3::min_eigenvalue() const {
    // Fixed-count cyclic Jacobi on the Hermitian 3x3. Hermitian eigenvalues
    // are perfectly conditioned in the matrix entries, whereas roots of the
    // characteristic cubic lose half the digits at the double eigenvalue of
    // any pure state, which is far too coarse for the 1e-10 PSD gate.
    // Twelve sweeps with no convergence parameter keep it deterministic.
    Eigen::Matrix3cd a = 0.5 * (m + m.adjoint());
    for (int sweep = 0; sweep < 12; ++sweep) {
        for (auto [p, q] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
            const Complex apq = a(p, q);
            const double mag = std::abs(apq);
            if (mag == 0.0) {
                continue;
            }
            const Complex phase = apq / mag;
            const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
            const double t =
                (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::hypot(1.0, tau));
            const double c = 1.0 / std::sqrt(1.0 + t * t);
            const double s = t * c;
            Eigen::Matrix3cd rot = Eigen::Matrix3cd::Identity();
            rot(p, p) = c;
            rot(p, q) = s;
            rot(q, p) = -s * std::conj(phase);
            rot(q, q) = c * std::conj(phase);
            a = (rot.adjoint() * a * rot).eval();
        }
    }
    return std::min({a(0, 0).real(), a(1, 1).real(), a(2, 2).real()});
}

void DensityMatrix3::validate() const {
    if (hermiticity_error() > 1e-12) {
        throw std::domain_error("DensityMatrix3: Hermiticity violated by " +
                                std::to_string(hermiticity_error()));
    }
    if (trace_deviation() > 1e-12) {
        throw std::domain_error("DensityMatrix3: trace deviates from 1 by " +
                                std::to_string(trace_deviation()));
    }
    const double lambda_min = min_eigenvalue();
    if (lambda_min < -1e-10) {
        throw std::domain_error("DensityMatrix3: negative eigenvalue " +
                                std::to_string(lambda_min));
    }
}

DensityMatrix3 density_matrix(const AmplitudeSet& a) {
    DensityMatrix3 rho;
    rho.source_time = a.t;
    rho.m(0, 0) = Complex(a.bath_weight + std::norm(a.dC), 0.0);
    rho.m(1, 1) = Complex(std::norm(a.dB), 0.0);
    rho.m(2, 2) = Complex(std::norm(a.dA), 0.0);
    rho.m(0, 1) = a.dC * std::conj(a.dB);
    rho.m(0, 2) = a.dC * std::conj(a.dA);
    rho.m(1, 2) = a.dB * std::conj(a.dA);
    rho.m(1, 0) = std::conj(rho.m(0, 1));
    rho.m(2, 0) = std::conj(rho.m(0, 2));
    rho.m(2, 1) = std::conj(rho.m(1, 2));
    return rho;
}

double l1_coherence(const DensityMatrix3& rho) {
    double sum = 0.0;
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
            if (r != c) {
                sum += std::abs(rho.m(r, c));
            }
        }
    }
    return sum;
}

}  // namespace vatom
