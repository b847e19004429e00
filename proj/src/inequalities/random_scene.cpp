#include "qcas/inequalities/random_scene.hpp"

#include "qcas/errors.hpp"

#include <Eigen/QR>

namespace qcas::inequalities {

Mat random_orthogonal(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> normal;
    Mat G(n, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) G(i, j) = normal(rng);
    Eigen::HouseholderQR<Mat> qr(G);
    Mat Q = qr.householderQ() * Mat::Identity(n, n);
    const Mat R = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < n; ++j)
        if (R(j, j) < 0.0) Q.col(j) *= -1.0;
    return Q;
}

Mat random_symmetric(int n, double bound, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-bound, bound);
    Mat M(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) M(i, j) = M(j, i) = u(rng);
    return M;
}

Mat random_skew(int n, double bound, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-bound, bound);
    Mat M = Mat::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            M(i, j) = u(rng);
            M(j, i) = -M(i, j);
        }
    return M;
}

PointwiseScene random_scene(const RandomSceneSpec& spec) {
    if (spec.dim % 4 != 0) throw StructureError("dimension must be a multiple of 4");
    if (spec.first_dim < 0 || spec.first_dim > spec.dim) throw DimensionError("split dimension out of range");
    std::mt19937_64 rng(spec.seed);
    PointwiseScene scene;
    scene.c = spec.c;
    scene.structure = quaternionic::QuaternionicStructure::quat_flat(spec.dim / 4);
    scene.metric = Mat::Identity(spec.dim, spec.dim);
    const Mat Q = random_orthogonal(spec.dim, rng);
    scene.first.metric_at = scene.metric;
    scene.second.metric_at = scene.metric;
    for (int j = 0; j < spec.dim; ++j) (j < spec.first_dim ? scene.first : scene.second).vectors.push_back(Q.col(j));
    const int a = spec.first_dim, b = spec.dim - spec.first_dim;
    for (int k = 0; k < b; ++k) scene.B.push_back(random_symmetric(a, spec.entry_bound, rng));
    for (int k = 0; k < a; ++k) scene.T.push_back(random_symmetric(b, spec.entry_bound, rng));
    for (int k = 0; k < b; ++k) scene.A.push_back(random_skew(a, spec.entry_bound, rng));
    return scene;
}

}  // namespace qcas::inequalities
