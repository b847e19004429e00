#pragma once

#include "qcas/maps/fundamental.hpp"

namespace qcas::maps {

/// How the intrinsic curvature of the fibers is obtained.
struct FiberModel {
    enum class Kind {
        Derived,      ///< from R^{N₁} and T through the submanifold Gauss formula
        Flat,         ///< fibers are flat
        RoundSphere,  ///< fibers are round spheres about `center` (flat ambient)
    };
    Kind kind = Kind::Derived;
    Vec center;

    static FiberModel parse(const std::string& text, int source_dim);
    std::string name() const;
};

/// R^{ker F∗}(F₁, F₂, F₃, F₄) at the point for vertical arguments.
double fiber_curvature(const FiberModel& model, const MapPoint& point, const ProjectorField& P, const Vec& F1,
                       const Vec& F2, const Vec& F3, const Vec& F4);

/// max over horizontal index quadruples of
/// |R²(F∗h₁,F∗h₂,F∗h₃,F∗h₄) − R¹(h₁,…,h₄) − g₂(B₁₃,B₂₄) + g₂(B₁₄,B₂₃)|,
/// with B taken from the supplied component slices.
double gauss_residual_map(const MapPoint& point, const SceneSplit& split, const MatList& B);
double gauss_residual_map(const MapPoint& point, const SceneSplit& split);

struct SubmersionResiduals {
    double vertical = 0.0;    ///< fiber Gauss identity with T
    double horizontal = 0.0;  ///< horizontal identity with A
    double mixed = 0.0;       ///< mixed identity with ∇T and ∇A
    double worst() const { return std::max({vertical, horizontal, mixed}); }
};

/// Residuals of the three curvature relations of a submersion in this engine's
/// convention (R(X,Y,Y,X) is sectional curvature):
///   R¹(F₁,F₂,F₃,F₄) = R^{ker}(F₁,…,F₄) − g(T_{F₁}F₄, T_{F₂}F₃) + g(T_{F₂}F₄, T_{F₁}F₃)
///   R¹(X₁,X₂,X₃,X₄) = R²(F∗X₁,…) + 2g(A_{X₁}X₂, A_{X₃}X₄) − g(A_{X₂}X₃, A_{X₁}X₄) + g(A_{X₁}X₃, A_{X₂}X₄)
///   R¹(X₁,F₁,F₂,X₂) = g((∇_{X₁}T)(F₁,F₂), X₂) + g((∇_{F₁}A)(X₁,X₂), F₂) − g(T_{F₁}X₁, T_{F₂}X₂) + g(A_{X₂}F₂, A_{X₁}F₁)
/// ∇T and ∇A use central differences of the coordinate components with step `h`.
SubmersionResiduals gauss_residual_submersion(const SmoothMap& map, const MapPoint& point, const SceneSplit& split,
                                              const FiberModel& fiber, double h = 1e-4);

/// 2τ of the fibers through the model: Σ R^{ker}(v_i, v_j, v_j, v_i).
double fiber_scalar_curvature(const FiberModel& model, const MapPoint& point, const SceneSplit& split);

}  // namespace qcas::maps
