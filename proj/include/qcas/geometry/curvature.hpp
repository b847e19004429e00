#pragma once

#include "qcas/geometry/chart.hpp"
#include "qcas/geometry/frame.hpp"
#include "qcas/geometry/tensor.hpp"

#include <functional>
#include <span>

namespace qcas::geometry {

/// Christoffel symbols Γ^k_ij stored as gamma(k, i, j), plus their partials
/// dgamma[m](k, i, j) = ∂_m Γ^k_ij obtained analytically from the metric jets.
struct Connection {
    Mat g;
    Mat g_inv;
    Tensor3 gamma;
    std::vector<Tensor3> dgamma;

    /// Γ(X, Y)^k = Γ^k_ij X^i Y^j.
    Vec apply(const Vec& x, const Vec& y) const { return gamma.contract(x, y); }
};

/// Curvature data at one chart point.
///
/// Convention: R(X,Y)Z = ∇_X∇_Y Z − ∇_Y∇_X Z − ∇_[X,Y]Z and
/// riemann(i,j,k,l) = g(R(∂_i,∂_j)∂_k, ∂_l), so R(X,Y,Y,X) is the sectional
/// curvature of an orthonormal pair (+1 on the unit sphere).
struct CurvaturePoint {
    Vec x;
    Mat g;
    Tensor3 gamma;
    Tensor4 riemann;

    double operator()(const Vec& a, const Vec& b, const Vec& c, const Vec& d) const {
        return riemann.contract(a, b, c, d);
    }
};

/// Any quadrilinear curvature form R(X, Y, Z, W).
using CurvatureForm = std::function<double(const Vec&, const Vec&, const Vec&, const Vec&)>;

Connection connection_from_jets(const MetricJets& jets);
Tensor4 riemann_from_connection(const Connection& conn);

Tensor3 christoffel(const MetricChart& chart, std::span<const double> x);
CurvaturePoint riemann(const MetricChart& chart, std::span<const double> x);

/// Wraps a CurvaturePoint as a CurvatureForm. The point must outlive the form.
CurvatureForm as_form(const CurvaturePoint& point);

/// 2τ = Σ_{i,j} R(e_i, e_j, e_j, e_i) over the frame (0 for frames of size < 2).
double scalar_curvature_of_frame(const CurvatureForm& R, const OrthoFrame& frame);

/// Σ_i Σ_j R(h_i, v_j, v_j, h_i).
double mixed_scalar(const CurvatureForm& R, const OrthoFrame& horizontal, const OrthoFrame& vertical);

/// 2τ / (k(k−1)); throws DimensionError for k < 2.
double normalized_scalar(double two_tau, int k);

/// Worst relative violation of the algebraic curvature symmetries and of the
/// first Bianchi identity, each scaled by max(1, max|R|).
struct SymmetryResiduals {
    double antisymmetry_first = 0.0;
    double antisymmetry_last = 0.0;
    double pair_symmetry = 0.0;
    double bianchi = 0.0;

    double worst() const;
};
SymmetryResiduals symmetry_residuals(const Tensor4& R);

/// max |∂_k g_ij − Γ^l_ki g_lj − Γ^l_kj g_il|.
double metric_compatibility_residual(const MetricJets& jets, const Tensor3& gamma);

}  // namespace qcas::geometry
