#include "qcas/casorati/casorati.hpp"

#include "qcas/errors.hpp"

#include <cmath>

namespace qcas::casorati {

CasoratiInput::CasoratiInput(MatList s, int n) : slices(std::move(s)), n_dist(n) {
    if (n_dist < 0) throw DimensionError("negative distribution dimension");
    for (const Mat& m : slices)
        if (m.rows() != n_dist || m.cols() != n_dist)
            throw DimensionError("coefficient slice is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                                 ", expected " + std::to_string(n_dist) + "x" + std::to_string(n_dist));
}

CasoratiInput CasoratiInput::from(MatList s) {
    const int n = s.empty() ? 0 : static_cast<int>(s.front().rows());
    return CasoratiInput(std::move(s), n);
}

double CasoratiInput::squared_norm() const {
    double sum = 0.0;
    for (const Mat& m : slices) sum += m.squaredNorm();
    return sum;
}

CasoratiInput CasoratiInput::scaled(double factor) const {
    MatList out;
    for (const Mat& m : slices) out.push_back(factor * m);
    return CasoratiInput(std::move(out), n_dist);
}

CasoratiInput CasoratiInput::rotated(const Mat& Q) const {
    MatList out;
    for (const Mat& m : slices) out.push_back(Q.transpose() * m * Q);
    return CasoratiInput(std::move(out), n_dist);
}

double casorati(const CasoratiInput& input) {
    if (input.n_dist < 1) throw DimensionError("Casorati curvature of an empty distribution");
    return input.squared_norm() / input.n_dist;
}

double casorati_subspace(const CasoratiInput& input, const std::vector<int>& indices) {
    const int k = static_cast<int>(indices.size());
    if (k < 2) throw DimensionError("subspace Casorati curvature needs at least two directions");
    for (int i : indices)
        if (i < 0 || i >= input.n_dist) throw DimensionError("subspace index out of range");
    double sum = 0.0;
    for (const Mat& m : input.slices)
        for (int i : indices)
            for (int j : indices) sum += m(i, j) * m(i, j);
    return sum / k;
}

double casorati_hyperplane(const CasoratiInput& input, const Vec& u) {
    const int n = input.n_dist;
    if (n < 2) throw DimensionError("hyperplane Casorati curvature needs n_dist >= 2");
    if (u.size() != n) throw DimensionError("normal has the wrong dimension");
    if (std::abs(u.norm() - 1.0) > 1e-12) throw DomainError("hyperplane normal is not a unit vector");
    const Mat P = Mat::Identity(n, n) - u * u.transpose();
    double sum = 0.0;
    for (const Mat& m : input.slices) sum += (P * m * P).squaredNorm();
    return sum / (n - 1);
}

}  // namespace qcas::casorati
