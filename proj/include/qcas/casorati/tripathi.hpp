#pragma once

#include "qcas/linalg.hpp"

#include <array>

namespace qcas::casorati {

/// f(t) = λ₁ Σ_{i<n} t_i² + λ₂ t_n² − 2 Σ_{i<j} t_i t_j on the hyperplane Σ t_i = k.
struct TripathiInstance {
    int n = 3;
    double k = 0.0;
    double lambda1 = 1.0;
    double lambda2 = 1.0;

    /// λ₂ = (n−1)/(λ₁ − n + 2).
    static double proviso_lambda2(int n, double lambda1);
    static TripathiInstance with_proviso(int n, double lambda1, double k);
    double proviso_defect() const;  ///< relative distance of λ₂ from the proviso value
    double objective(const Vec& t) const;
    Mat quadratic_form() const;  ///< symmetric Q with f(t) = tᵀQt
};

struct TripathiSolution {
    Vec t;
    double value = 0.0;
    /// The three stated expressions for t_n: k/(λ₂+1), k(n−1)/((λ₁+1)λ₂), k(λ₁−n+2)/(λ₁+1).
    std::array<double, 3> tn_forms{};
};

/// Closed-form minimizer. Throws DimensionError for n < 3, DomainError for
/// non-positive λ, ProvisoError unless the proviso holds to 1e-12 relative.
TripathiSolution tripathi_minimize(const TripathiInstance& inst);

/// Minimizer of tᵀQt over Σ t_i = k from the KKT system; Q must be positive
/// definite on the hyperplane (DegeneracyError otherwise).
Vec minimize_on_hyperplane(const Mat& Q, double k);

}  // namespace qcas::casorati
