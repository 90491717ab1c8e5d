#pragma once

#include <Eigen/Dense>

#include "vatom/model.hpp"

namespace vatom {

/// Reduced density matrix of the atom in basis order [|C>, |B>, |A>].
struct DensityMatrix3 {
    Eigen::Matrix3cd m = Eigen::Matrix3cd::Zero();
    double source_time = 0.0;

    double trace_deviation() const;     // |tr(m) - 1|
    double hermiticity_error() const;   // max entrywise |m - m^dagger|
    /// Smallest eigenvalue via the closed-form trigonometric solution of the
    /// 3x3 Hermitian characteristic cubic (no iterative solver involved).
    double min_eigenvalue() const;

    /// Throws std::domain_error unless Hermitian (1e-12), unit trace (1e-12)
    /// and positive semidefinite (min eigenvalue >= -1e-10).
    void validate() const;
};

/// rho(t) built from an amplitude set; the leaked weight piles onto |C><C|.
DensityMatrix3 density_matrix(const AmplitudeSet& a);

/// Sum of the absolute values of the six off-diagonal entries.
double l1_coherence(const DensityMatrix3& rho);

}  // namespace vatom
