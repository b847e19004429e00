#pragma once

#include "qcas/linalg.hpp"

#include <array>
#include <string>

namespace qcas::quaternionic {

/// Three almost complex structures J₁, J₂, J₃ acting on a 4m-dimensional space
/// (pointwise matrices in chart components).
class QuaternionicStructure {
public:
    /// Throws StructureError if the matrices are not square, not all the same
    /// size, or the size is not a multiple of 4.
    explicit QuaternionicStructure(std::array<Mat, 3> J);

    /// Left multiplication by the quaternion units i, j, k on each ℍ ≅ ℝ⁴ block
    /// of ℝ^{4m}. Registry name "quat-flat:m".
    static QuaternionicStructure quat_flat(int m);
    static QuaternionicStructure builtin(const std::string& name);

    int dim() const { return static_cast<int>(J_[0].rows()); }
    const Mat& J(int alpha) const { return J_[static_cast<std::size_t>(alpha)]; }
    const std::array<Mat, 3>& matrices() const { return J_; }

private:
    std::array<Mat, 3> J_;
};

/// Maximum violation of each structure identity under the metric `g`.
struct StructureReport {
    std::array<double, 3> square_defect{};     ///< ‖J_α² + I‖_max
    double product_defect = 0.0;               ///< ‖J₁J₂ − J₃‖_max
    double anticommute_defect = 0.0;           ///< ‖J₂J₁ + J₃‖_max
    std::array<double, 3> hermitian_defect{};  ///< ‖J_αᵀ g J_α − g‖_max

    double worst() const;
    bool pass(double tol = 1e-10) const { return worst() < tol; }
    /// Name of the first identity exceeding tol, or empty.
    std::string first_failure(double tol = 1e-10) const;
};

StructureReport check_quaternionic_structure(const QuaternionicStructure& s, const Mat& g);

/// Throws StructureError naming the failed identity.
void require_quaternionic_structure(const QuaternionicStructure& s, const Mat& g, double tol = 1e-10);

}  // namespace qcas::quaternionic
