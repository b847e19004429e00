#pragma once

#include <Eigen/Dense>

#include <vector>

namespace qcas {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Vectors stored column-wise; used for frames and slice lists alike.
using VecList = std::vector<Vec>;
using MatList = std::vector<Mat>;

/// Largest absolute entry; 0 for empty matrices.
inline double max_abs(const Mat& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

}  // namespace qcas
