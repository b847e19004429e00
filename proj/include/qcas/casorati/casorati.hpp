#pragma once

#include "qcas/linalg.hpp"

#include <vector>

namespace qcas::casorati {

/// Coefficients h^α_ij of a fundamental tensor over one distribution:
/// one n_dist × n_dist slice per codistribution direction α.
struct CasoratiInput {
    MatList slices;
    int n_dist = 0;

    CasoratiInput() = default;
    /// Throws DimensionError if a slice is not square or sizes disagree.
    CasoratiInput(MatList slices, int n_dist);
    /// Infers n_dist from the first slice.
    static CasoratiInput from(MatList slices);

    double squared_norm() const;
    CasoratiInput scaled(double factor) const;
    /// Every slice conjugated by the orthogonal matrix Q: Qᵀ h Q.
    CasoratiInput rotated(const Mat& Q) const;
};

/// C = (1/n_dist) Σ_α Σ_ij (h^α_ij)². Throws DimensionError for n_dist = 0.
double casorati(const CasoratiInput& input);

/// C^L over the coordinate subspace spanned by `indices` (0-based):
/// (1/k) Σ_α Σ_{i,j ∈ indices} (h^α_ij)². Throws DimensionError for k < 2.
double casorati_subspace(const CasoratiInput& input, const std::vector<int>& indices);

/// C^L over the hyperplane with unit normal u:
/// (1/(n−1)) Σ_α ‖(I − uuᵀ) h^α (I − uuᵀ)‖²_F.
/// Throws DomainError unless |‖u‖ − 1| ≤ 1e-12.
double casorati_hyperplane(const CasoratiInput& input, const Vec& u);

}  // namespace qcas::casorati
