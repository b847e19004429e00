#include "qcas/maps/split.hpp"

#include "qcas/errors.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>

namespace qcas::maps {

namespace {

geometry::OrthoFrame rotate(const geometry::OrthoFrame& frame, const Mat& Q) {
    geometry::OrthoFrame out{{}, frame.metric_at};
    if (frame.size() == 0) return out;
    const Mat E = frame.matrix() * Q;
    for (int a = 0; a < E.cols(); ++a) out.vectors.push_back(E.col(a));
    return out;
}

double cross_defect(const geometry::OrthoFrame& a, const geometry::OrthoFrame& b) {
    double worst = std::max(a.orthonormality_defect(), b.orthonormality_defect());
    for (const Vec& u : a.vectors)
        for (const Vec& v : b.vectors) worst = std::max(worst, std::abs(geometry::inner(a.metric_at, u, v)));
    return worst;
}

}  // namespace

double SplitReport::worst() const {
    return std::max({source_orthogonality, target_orthogonality, kernel_residual});
}

Differential differential(const SmoothMap& map, const MapPoint& point, const SplitOptions& options) {
    const Mat& J = point.F.jacobian;
    const Mat& g1 = point.g1();
    const Mat& g2 = point.g2();
    const int n1 = static_cast<int>(J.cols());

    Differential out;
    out.jacobian = J;
    Eigen::JacobiSVD<Mat> svd(J, Eigen::ComputeFullV);
    out.singular_values = svd.singularValues();
    const double scale = std::max(1.0, out.singular_values.size() > 0 ? out.singular_values(0) : 0.0);
    int rank = 0;
    for (Eigen::Index i = 0; i < out.singular_values.size(); ++i)
        if (out.singular_values(i) > options.kernel_threshold * scale) ++rank;
    out.numerical_rank = rank;
    if (rank != map.rank())
        throw RankError("differential has numerical rank " + std::to_string(rank) + " but rank " +
                        std::to_string(map.rank()) + " was declared");

    // The Euclidean kernel equals the metric kernel; only its complement needs g₁.
    const Mat& V = svd.matrixV();
    VecList kernel;
    for (int i = rank; i < n1; ++i) kernel.push_back(V.col(i));
    SceneSplit& split = out.split;
    split.vertical = kernel.empty() ? geometry::OrthoFrame{{}, g1} : geometry::gram_schmidt(kernel, g1);
    // Leading right singular vectors, made g₁-orthogonal to the kernel, span
    // the horizontal space in an order independent of the coordinates.
    VecList seeds;
    for (int i = 0; i < rank; ++i) {
        Vec v = V.col(i);
        for (const Vec& k : split.vertical.vectors) v -= geometry::inner(g1, k, v) * k;
        seeds.push_back(v);
    }
    split.horizontal = geometry::gram_schmidt(seeds, g1);

    split.range.metric_at = g2;
    for (const Vec& h : split.horizontal.vectors) split.range.vectors.push_back(J * h);
    out.isometry_defect = split.range.orthonormality_defect();
    if (out.isometry_defect > options.isometry_tolerance)
        throw NotRiemannianMapError("differential is not isometric on the horizontal space (defect " +
                                    std::to_string(out.isometry_defect) + ")");
    if (rank < g2.rows())
        split.range_perp = geometry::orthogonal_complement(geometry::gram_schmidt(split.range.vectors, g2));
    else
        split.range_perp = geometry::OrthoFrame{{}, g2};
    return out;
}

Differential differential(const SmoothMap& map, std::span<const double> x, const SplitOptions& options) {
    return differential(map, evaluate_point(map, x), options);
}

SplitReport check_split(const SceneSplit& split, const Mat& jacobian, const Mat& g2) {
    SplitReport r;
    r.source_orthogonality = cross_defect(split.vertical, split.horizontal);
    geometry::OrthoFrame range{split.range.vectors, g2};
    geometry::OrthoFrame perp{split.range_perp.vectors, g2};
    r.target_orthogonality = cross_defect(range, perp);
    for (const Vec& v : split.vertical.vectors) r.kernel_residual = std::max(r.kernel_residual, (jacobian * v).norm());
    return r;
}

SceneSplit rotate_split(const SceneSplit& split, const Mat& horizontal_rotation, const Mat& vertical_rotation,
                        const Mat& range_perp_rotation) {
    SceneSplit out;
    out.horizontal = rotate(split.horizontal, horizontal_rotation);
    out.range = rotate(split.range, horizontal_rotation);
    out.vertical = rotate(split.vertical, vertical_rotation);
    out.range_perp = rotate(split.range_perp, range_perp_rotation);
    return out;
}

}  // namespace qcas::maps
