#pragma once

#include "qcas/geometry/curvature.hpp"
#include "qcas/quaternionic/structure.hpp"

namespace qcas::quaternionic {

/// Curvature of a quaternionic space form M(c) at a point, given the local
/// structure and the metric matrix in the same components.
struct QSFOracle {
    double c = 0.0;
    QuaternionicStructure structure;
    Mat metric_at;

    QSFOracle(double c_, QuaternionicStructure s, Mat g);

    /// R(Z₁,Z₂,Z₃,Z₄), same sign convention as geometry::CurvaturePoint.
    double operator()(const Vec& z1, const Vec& z2, const Vec& z3, const Vec& z4) const;

    /// Full covariant component array in the coordinate basis.
    geometry::Tensor4 components() const;

    /// The oracle must outlive the returned form.
    geometry::CurvatureForm form() const;
};

double qsf_curvature(const QSFOracle& oracle, const Vec& z1, const Vec& z2, const Vec& z3, const Vec& z4);

/// Largest |R(e_a,e_b,e_c,e_d) − oracle(e_a,e_b,e_c,e_d)| over an orthonormal
/// frame. Used to accept a chart as a space form in chart mode.
double space_form_mismatch(const geometry::CurvatureForm& R, const QSFOracle& oracle,
                           const geometry::OrthoFrame& frame);

}  // namespace qcas::quaternionic
