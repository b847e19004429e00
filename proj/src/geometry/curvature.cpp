#include "qcas/geometry/curvature.hpp"

#include "qcas/errors.hpp"

#include <algorithm>
#include <cmath>

namespace qcas::geometry {

Connection connection_from_jets(const MetricJets& jets) {
    const int n = static_cast<int>(jets.g.rows());
    Connection conn;
    conn.g = jets.g;

    Eigen::LDLT<Mat> ldlt(jets.g);
    if (ldlt.info() != Eigen::Success || !ldlt.isPositive() ||
        ldlt.vectorD().cwiseAbs().minCoeff() <= 1e-14 * std::max(1.0, jets.g.cwiseAbs().maxCoeff()))
        throw DegeneracyError("metric is singular; Christoffel symbols are undefined");
    conn.g_inv = ldlt.solve(Mat::Identity(n, n));

    // Christoffel symbols of the first kind, [ij, l] stored as first(l, i, j).
    Tensor3 first(n);
    for (int l = 0; l < n; ++l)
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                const double v = 0.5 * (jets.dg[i](j, l) + jets.dg[j](i, l) - jets.dg[l](i, j));
                first(l, i, j) = v;
                first(l, j, i) = v;
            }

    conn.gamma = Tensor3(n);
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                double v = 0.0;
                for (int l = 0; l < n; ++l) v += conn.g_inv(k, l) * first(l, i, j);
                conn.gamma(k, i, j) = v;
                conn.gamma(k, j, i) = v;
            }

    conn.dgamma.assign(static_cast<std::size_t>(n), Tensor3(n));
    for (int m = 0; m < n; ++m) {
        const Mat dg_inv = -conn.g_inv * jets.dg[m] * conn.g_inv;
        const auto& d2 = jets.d2g[m];
        Tensor3& out = conn.dgamma[m];
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                Vec dfirst(n);
                for (int l = 0; l < n; ++l) dfirst(l) = 0.5 * (d2[i](j, l) + d2[j](i, l) - d2[l](i, j));
                for (int k = 0; k < n; ++k) {
                    double v = 0.0;
                    for (int l = 0; l < n; ++l) v += dg_inv(k, l) * first(l, i, j) + conn.g_inv(k, l) * dfirst(l);
                    out(k, i, j) = v;
                    out(k, j, i) = v;
                }
            }
    }
    return conn;
}

Tensor4 riemann_from_connection(const Connection& conn) {
    const int n = conn.gamma.dim();
    const Tensor3& G = conn.gamma;
    // Mixed components (R(∂_i,∂_j)∂_k)^q.
    Tensor4 mixed(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            for (int k = 0; k < n; ++k)
                for (int q = 0; q < n; ++q) {
                    double v = conn.dgamma[i](q, j, k) - conn.dgamma[j](q, i, k);
                    for (int p = 0; p < n; ++p) v += G(q, i, p) * G(p, j, k) - G(q, j, p) * G(p, i, k);
                    mixed(i, j, k, q) = v;
                }
        }
    Tensor4 R(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    double v = 0.0;
                    for (int q = 0; q < n; ++q) v += conn.g(l, q) * mixed(i, j, k, q);
                    R(i, j, k, l) = v;
                }
    return R;
}

Tensor3 christoffel(const MetricChart& chart, std::span<const double> x) {
    return connection_from_jets(chart.metric_jets(x)).gamma;
}

CurvaturePoint riemann(const MetricChart& chart, std::span<const double> x) {
    const Connection conn = connection_from_jets(chart.metric_jets(x));
    CurvaturePoint p;
    p.x = Eigen::Map<const Vec>(x.data(), static_cast<Eigen::Index>(x.size()));
    p.g = conn.g;
    p.gamma = conn.gamma;
    p.riemann = riemann_from_connection(conn);
    return p;
}

CurvatureForm as_form(const CurvaturePoint& point) {
    return [&point](const Vec& a, const Vec& b, const Vec& c, const Vec& d) { return point(a, b, c, d); };
}

double scalar_curvature_of_frame(const CurvatureForm& R, const OrthoFrame& frame) {
    double sum = 0.0;
    for (int i = 0; i < frame.size(); ++i)
        for (int j = 0; j < frame.size(); ++j) {
            if (i == j) continue;
            sum += R(frame.vectors[i], frame.vectors[j], frame.vectors[j], frame.vectors[i]);
        }
    return sum;
}

double mixed_scalar(const CurvatureForm& R, const OrthoFrame& horizontal, const OrthoFrame& vertical) {
    double sum = 0.0;
    for (const Vec& h : horizontal.vectors)
        for (const Vec& v : vertical.vectors) sum += R(h, v, v, h);
    return sum;
}

double normalized_scalar(double two_tau, int k) {
    if (k < 2) throw DimensionError("normalized scalar curvature needs a frame of dimension at least 2, got " +
                                    std::to_string(k));
    return two_tau / (static_cast<double>(k) * (k - 1));
}

double SymmetryResiduals::worst() const {
    return std::max({antisymmetry_first, antisymmetry_last, pair_symmetry, bianchi});
}

SymmetryResiduals symmetry_residuals(const Tensor4& R) {
    const int n = R.dim();
    const double scale = std::max(1.0, R.max_abs());
    SymmetryResiduals out;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    const double r = R(i, j, k, l);
                    out.antisymmetry_first = std::max(out.antisymmetry_first, std::abs(r + R(j, i, k, l)));
                    out.antisymmetry_last = std::max(out.antisymmetry_last, std::abs(r + R(i, j, l, k)));
                    out.pair_symmetry = std::max(out.pair_symmetry, std::abs(r - R(k, l, i, j)));
                    out.bianchi = std::max(out.bianchi, std::abs(r + R(j, k, i, l) + R(k, i, j, l)));
                }
    out.antisymmetry_first /= scale;
    out.antisymmetry_last /= scale;
    out.pair_symmetry /= scale;
    out.bianchi /= scale;
    return out;
}

double metric_compatibility_residual(const MetricJets& jets, const Tensor3& gamma) {
    const int n = static_cast<int>(jets.g.rows());
    double worst = 0.0;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                double v = jets.dg[k](i, j);
                for (int l = 0; l < n; ++l) v -= gamma(l, k, i) * jets.g(l, j) + gamma(l, k, j) * jets.g(i, l);
                worst = std::max(worst, std::abs(v));
            }
    return worst;
}

}  // namespace qcas::geometry
