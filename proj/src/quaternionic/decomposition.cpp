#include "qcas/quaternionic/decomposition.hpp"

#include "qcas/errors.hpp"

#include <cmath>

namespace qcas::quaternionic {

namespace {
constexpr double kFrameTol = 1e-10;
}

JDecomposition decompose_J(const QuaternionicStructure& structure, const geometry::OrthoFrame& first,
                           const geometry::OrthoFrame& second) {
    const Mat& g = first.metric_at;
    if (g.rows() != structure.dim()) throw DimensionError("decompose_J: frame and structure dimensions differ");
    if (second.size() > 0 && (second.metric_at - g).cwiseAbs().maxCoeff() > 0.0)
        throw FrameError("decompose_J: frames carry different metrics");

    geometry::OrthoFrame combined{first.vectors, g};
    combined.vectors.insert(combined.vectors.end(), second.vectors.begin(), second.vectors.end());
    if (combined.orthonormality_defect() > kFrameTol)
        throw FrameError("decompose_J: split frames are not orthonormal and mutually orthogonal");

    JDecomposition out;
    out.first_dim = first.size();
    out.second_dim = second.size();
    const Mat E = combined.matrix();
    const int s = out.first_dim;
    const int l = out.second_dim;
    for (int a = 0; a < 3; ++a) {
        const Mat M = E.transpose() * g * structure.J(a) * E;
        out.skew[a] = M;
        out.norms_P[a] = M.topLeftCorner(s, s).squaredNorm();
        out.norms_Q[a] = M.bottomRightCorner(l, l).squaredNorm();
        out.norms_PV[a] = M.topRightCorner(s, l).squaredNorm();
    }
    return out;
}

}  // namespace qcas::quaternionic
