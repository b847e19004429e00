#pragma once

#include "qcas/casorati/extrema.hpp"

#include <optional>

namespace qcas::inequalities {

/// Equality-case residuals for one distribution tensor h (B or T), measured in
/// a frame rotated so that the optimizer's distinguished direction is last.
struct EqualityDiagnostics {
    double offdiag_max = 0.0;
    double eigen_pattern_residual = 0.0;  ///< max_α distance of diag(h^α) from (λ,…,λ,2λ)
    double common_eigendirection_residual = 0.0;
    double commutator_max = 0.0;
    double A_norm = 0.0;
    std::optional<double> bracket_verticality_residual;
    double scale = 0.0;  ///< max |h^α_ij| and |A| used to normalize the verdicts

    /// Each condition holds iff its residual ≤ tol · max(scale, 1e-12).
    bool quasi_umbilical(double tol = 1e-10) const;
    bool diagonal(double tol = 1e-10) const;
    bool integrable(double tol = 1e-10) const;
};

/// Orthogonal matrix whose last column is u (Householder reflection).
Mat frame_with_last(const Vec& u);

/// `h` is the distribution tensor, `extrema` its hyperplane extrema, `A` the
/// horizontal tensor whose vanishing is part of the submersion equality cases.
EqualityDiagnostics equality_diagnostics(const casorati::CasoratiInput& h, const casorati::HyperplaneExtrema& extrema,
                                         const casorati::CasoratiInput* A = nullptr,
                                         std::optional<double> bracket_verticality = std::nullopt);

}  // namespace qcas::inequalities
