#include "qcas/geometry/frame.hpp"

#include "qcas/errors.hpp"

#include <cmath>

namespace qcas::geometry {

namespace {
constexpr double kRankTol = 1e-10;
// Looser cut when scanning coordinate vectors for a complement: a candidate that
// is almost inside the current span is skipped rather than rejected.
constexpr double kCandidateTol = 1e-6;
}  // namespace

Mat OrthoFrame::matrix() const {
    Mat m(ambient_dim(), size());
    for (int i = 0; i < size(); ++i) m.col(i) = vectors[static_cast<std::size_t>(i)];
    return m;
}

double OrthoFrame::orthonormality_defect() const {
    double worst = 0.0;
    for (int a = 0; a < size(); ++a)
        for (int b = 0; b < size(); ++b) {
            const double expected = a == b ? 1.0 : 0.0;
            worst = std::max(worst, std::abs(inner(metric_at, vectors[a], vectors[b]) - expected));
        }
    return worst;
}

OrthoFrame gram_schmidt(const VecList& vectors, const Mat& g_at) {
    OrthoFrame frame{{}, g_at};
    for (std::size_t k = 0; k < vectors.size(); ++k) {
        const Vec& v = vectors[k];
        if (v.size() != g_at.rows()) throw DimensionError("gram_schmidt: vector dimension mismatch");
        const double original = std::sqrt(std::max(0.0, inner(g_at, v, v)));
        Vec w = v;
        // Two passes keep the result orthonormal to working precision.
        for (int pass = 0; pass < 2; ++pass)
            for (const Vec& e : frame.vectors) w -= inner(g_at, e, w) * e;
        const double norm = std::sqrt(std::max(0.0, inner(g_at, w, w)));
        if (original == 0.0 || norm <= kRankTol * original)
            throw DependencyError("gram_schmidt: vector " + std::to_string(k + 1) +
                                  " is linearly dependent on its predecessors");
        frame.vectors.push_back(w / norm);
    }
    return frame;
}

OrthoFrame orthogonal_complement(const OrthoFrame& frame) {
    const int n = frame.ambient_dim();
    OrthoFrame work = frame;
    OrthoFrame out{{}, frame.metric_at};
    for (int i = 0; i < n && work.size() < n; ++i) {
        Vec w = Vec::Unit(n, i);
        const double original = std::sqrt(inner(frame.metric_at, w, w));
        for (int pass = 0; pass < 2; ++pass)
            for (const Vec& e : work.vectors) w -= inner(frame.metric_at, e, w) * e;
        const double norm = std::sqrt(std::max(0.0, inner(frame.metric_at, w, w)));
        if (norm <= kCandidateTol * original) continue;
        w /= norm;
        work.vectors.push_back(w);
        out.vectors.push_back(w);
    }
    if (work.size() != n) throw DependencyError("orthogonal_complement: could not complete the frame");
    return out;
}

OrthoFrame orthogonal_complement(const VecList& vectors, const Mat& g_at) {
    return orthogonal_complement(gram_schmidt(vectors, g_at));
}

}  // namespace qcas::geometry
