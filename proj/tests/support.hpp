#pragma once

#include "qcas/geometry/frame.hpp"
#include "qcas/linalg.hpp"
#include "qcas/quaternionic/structure.hpp"

#include <Eigen/QR>

#include <array>
#include <cmath>
#include <random>
#include <span>

namespace qcas::test {

inline std::span<const double> span_of(const Vec& v) { return {v.data(), static_cast<std::size_t>(v.size())}; }

inline Vec random_vector(int n, std::mt19937_64& rng, double lo = -1.0, double hi = 1.0) {
    std::uniform_real_distribution<double> u(lo, hi);
    Vec v(n);
    for (int i = 0; i < n; ++i) v(i) = u(rng);
    return v;
}

inline Vec random_unit(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> normal;
    Vec v(n);
    for (int i = 0; i < n; ++i) v(i) = normal(rng);
    return v.normalized();
}

inline Mat random_rotation(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> normal;
    Mat G(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) G(i, j) = normal(rng);
    Eigen::HouseholderQR<Mat> qr(G);
    return qr.householderQ() * Mat::Identity(n, n);
}

inline geometry::OrthoFrame columns(const Mat& Q, int first, int count, const Mat& g) {
    geometry::OrthoFrame f;
    f.metric_at = g;
    for (int j = first; j < first + count; ++j) f.vectors.push_back(Q.col(j));
    return f;
}

/// Space-form curvature written out term by term from the defining formula:
/// (c/4){g(Z2,Z3)g(Z1,Z4) − g(Z1,Z3)g(Z2,Z4)}
///   + (c/4)Σ_α{g(Z1,J_αZ3)g(J_αZ2,Z4) − g(Z2,J_αZ3)g(J_αZ1,Z4) + 2g(Z1,J_αZ2)g(J_αZ3,Z4)}.
inline double qsf_reference(double c, const quaternionic::QuaternionicStructure& s, const Mat& g, const Vec& z1,
                            const Vec& z2, const Vec& z3, const Vec& z4) {
    auto ip = [&g](const Vec& a, const Vec& b) { return a.dot(g * b); };
    double r = ip(z2, z3) * ip(z1, z4) - ip(z1, z3) * ip(z2, z4);
    for (int a = 0; a < 3; ++a) {
        const Mat& J = s.J(a);
        r += ip(z1, J * z3) * ip(J * z2, z4) - ip(z2, J * z3) * ip(J * z1, z4) + 2.0 * ip(z1, J * z2) * ip(J * z3, z4);
    }
    return c / 4.0 * r;
}

/// C^L of the hyperplane u^⊥ from an explicit orthonormal basis of it.
inline double hyperplane_casorati_reference(const MatList& slices, const Vec& u) {
    const int n = static_cast<int>(u.size());
    Mat M(n, n + 1);
    M << u, Mat::Identity(n, n);
    Eigen::HouseholderQR<Mat> qr(M);
    const Mat Q = qr.householderQ() * Mat::Identity(n, n);
    const Mat E = Q.rightCols(n - 1);
    double sum = 0.0;
    for (const Mat& h : slices) sum += (E.transpose() * h * E).squaredNorm();
    return sum / (n - 1);
}

}  // namespace qcas::test
