#pragma once

#include "qcas/linalg.hpp"

namespace qcas::geometry {

/// Orthonormal family of tangent vectors (chart components) at one point.
struct OrthoFrame {
    VecList vectors;
    Mat metric_at;

    int size() const { return static_cast<int>(vectors.size()); }
    int ambient_dim() const { return static_cast<int>(metric_at.rows()); }

    /// Vectors as columns (ambient_dim × size).
    Mat matrix() const;

    /// max |g(e_a, e_b) − δ_ab|.
    double orthonormality_defect() const;
};

/// Modified Gram–Schmidt under the inner product `g_at`. Throws DependencyError
/// if a vector's residual norm falls below 1e-10 of its original length.
OrthoFrame gram_schmidt(const VecList& vectors, const Mat& g_at);

/// Extends `frame` by the g-orthogonal complement, drawing candidates from the
/// coordinate basis. The returned frame holds only the new vectors.
OrthoFrame orthogonal_complement(const OrthoFrame& frame);

/// Same, for an empty starting frame in dimension n.
OrthoFrame orthogonal_complement(const VecList& vectors, const Mat& g_at);

/// g(x, y).
inline double inner(const Mat& g, const Vec& x, const Vec& y) { return x.dot(g * y); }

}  // namespace qcas::geometry
