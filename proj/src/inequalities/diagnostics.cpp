#include "qcas/inequalities/diagnostics.hpp"

#include <algorithm>
#include <cmath>

namespace qcas::inequalities {

namespace {

bool small(double residual, double scale, double tol) { return residual <= tol * std::max(scale, 1e-12); }

double max_abs(const casorati::CasoratiInput& h) {
    double m = 0.0;
    for (const Mat& s : h.slices)
        if (s.size() > 0) m = std::max(m, s.cwiseAbs().maxCoeff());
    return m;
}

}  // namespace

bool EqualityDiagnostics::quasi_umbilical(double tol) const {
    return small(eigen_pattern_residual, scale, tol) && small(common_eigendirection_residual, scale, tol);
}

bool EqualityDiagnostics::diagonal(double tol) const { return small(offdiag_max, scale, tol); }

bool EqualityDiagnostics::integrable(double tol) const { return small(A_norm, scale, tol); }

Mat frame_with_last(const Vec& u) {
    const Eigen::Index n = u.size();
    const Vec en = Vec::Unit(n, n - 1);
    Vec w = u.normalized() - en;
    if (w.norm() < 1e-15) return Mat::Identity(n, n);
    w.normalize();
    // Householder H = I − 2wwᵀ maps e_n to u, so its last column is u.
    return Mat::Identity(n, n) - 2.0 * w * w.transpose();
}

EqualityDiagnostics equality_diagnostics(const casorati::CasoratiInput& h, const casorati::HyperplaneExtrema& extrema,
                                         const casorati::CasoratiInput* A, std::optional<double> bracket_verticality) {
    EqualityDiagnostics d;
    const int n = h.n_dist;
    d.scale = max_abs(h);
    if (A) {
        d.A_norm = std::sqrt(A->squared_norm());
        d.scale = std::max(d.scale, max_abs(*A));
    }
    d.bracket_verticality_residual = bracket_verticality;
    if (n == 0) return d;

    const Mat Q = extrema.argmin_normal.size() == n ? frame_with_last(extrema.argmin_normal) : Mat::Identity(n, n);
    const casorati::CasoratiInput r = h.rotated(Q);
    for (const Mat& m : r.slices) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) d.offdiag_max = std::max(d.offdiag_max, std::abs(m(i, j)));
        double weighted = 2.0 * m(n - 1, n - 1);
        for (int i = 0; i < n - 1; ++i) weighted += m(i, i);
        const double lambda = weighted / (n + 3);
        double sq = 0.0;
        for (int i = 0; i < n - 1; ++i) sq += (m(i, i) - lambda) * (m(i, i) - lambda);
        sq += (m(n - 1, n - 1) - 2.0 * lambda) * (m(n - 1, n - 1) - 2.0 * lambda);
        d.eigen_pattern_residual = std::max(d.eigen_pattern_residual, std::sqrt(sq));
        for (int i = 0; i < n - 1; ++i)
            d.common_eigendirection_residual = std::max(d.common_eigendirection_residual, std::abs(m(i, n - 1)));
    }
    for (std::size_t a = 0; a < h.slices.size(); ++a)
        for (std::size_t b = a + 1; b < h.slices.size(); ++b) {
            const Mat& x = h.slices[a];
            const Mat& y = h.slices[b];
            d.commutator_max = std::max(d.commutator_max, (x * y - y * x).norm());
        }
    return d;
}

}  // namespace qcas::inequalities
