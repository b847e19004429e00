#pragma once

#include "qcas/geometry/frame.hpp"
#include "qcas/quaternionic/structure.hpp"

#include <array>

namespace qcas::quaternionic {

/// Block norms of the skew matrices M^α_ab = g(e_a, J_α e_b) over a combined
/// frame (first block followed by second block).
///
/// Submersion mode: first = horizontal, second = vertical, so norms_P = ‖P_α‖²,
/// norms_Q = ‖Q_α‖², norms_PV = ‖P_α^V‖². Map mode: first = range,
/// second = range⊥, so norms_P = ‖P_α^R‖² and norms_Q is the range⊥ block.
struct JDecomposition {
    int first_dim = 0;
    int second_dim = 0;
    std::array<Mat, 3> skew;  ///< M^α over the combined frame
    std::array<double, 3> norms_P{};
    std::array<double, 3> norms_Q{};
    std::array<double, 3> norms_PV{};

    double sum_P() const { return norms_P[0] + norms_P[1] + norms_P[2]; }
    double sum_Q() const { return norms_Q[0] + norms_Q[1] + norms_Q[2]; }
    double sum_PV() const { return norms_PV[0] + norms_PV[1] + norms_PV[2]; }
    /// Σ_ab (M^α_ab)² over the whole combined frame.
    double total(int alpha) const { return skew[static_cast<std::size_t>(alpha)].squaredNorm(); }
};

/// Throws FrameError if either block is not orthonormal or the blocks are not
/// mutually orthogonal (tolerance 1e-10).
JDecomposition decompose_J(const QuaternionicStructure& structure, const geometry::OrthoFrame& first,
                           const geometry::OrthoFrame& second);

}  // namespace qcas::quaternionic
