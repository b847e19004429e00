#pragma once

#include "qcas/maps/split.hpp"

namespace qcas::maps {

/// Component arrays slice[α](i, j) of B, T or A in split frames, with the
/// squared norms used by the Casorati machinery.
struct FundamentalTensor {
    MatList B;  ///< α over range_perp, i,j over horizontal
    MatList T;  ///< α over horizontal, i,j over vertical
    MatList A;  ///< α over vertical, i,j over horizontal

    static double squared_norm(const MatList& slices);
    /// Σ_α (trace slice_α)².
    static double squared_trace_norm(const MatList& slices);
    /// max over α, i, j of |slice(i,j) − sign·slice(j,i)|.
    static double symmetry_defect(const MatList& slices, double sign);
};

/// (∇F∗)(X, Y) = ∇²_{F∗X}F∗Y − F∗(∇¹_X Y), computed with constant-component
/// extensions of X and Y.
Vec map_second_fundamental(const MapPoint& point, const Vec& X, const Vec& Y);

/// B^α_ij = g₂((∇F∗)(h_i, h_j), V_α).
MatList second_fundamental_form(const MapPoint& point, const SceneSplit& split);

/// Horizontal projector P_H = G Jᵀ (J G Jᵀ)⁻¹ J (G = g₁⁻¹) and its coordinate
/// partials. Valid for submersions; throws RankError otherwise.
struct ProjectorField {
    Mat PH;
    MatList dPH;  ///< dPH[m] = ∂_m P_H

    Mat PV() const { return Mat::Identity(PH.rows(), PH.cols()) - PH; }
    /// ∂_X P_H = Σ_m X^m ∂_m P_H.
    Mat directional(const Vec& X) const;
};

ProjectorField projector_field(const MapPoint& point);

/// O'Neill T_E F = h∇_{vE}vF + v∇_{vE}hF.
Vec oneill_T_vector(const MapPoint& point, const ProjectorField& P, const Vec& E, const Vec& F);
/// O'Neill A_E F = v∇_{hE}hF + h∇_{hE}vF.
Vec oneill_A_vector(const MapPoint& point, const ProjectorField& P, const Vec& E, const Vec& F);

/// T^α_ij = g₁(T_{v_i}v_j, h_α).
MatList oneill_T(const MapPoint& point, const SceneSplit& split);
/// A^α_ij = g₁(A_{h_i}h_j, v_α).
MatList oneill_A(const MapPoint& point, const SceneSplit& split);

/// T^α_ij via the map: −g₂((∇F∗)(v_i, v_j), F∗h_α). Independent of projector
/// differentiation; used as a cross-check.
MatList oneill_T_via_map(const MapPoint& point, const SceneSplit& split);

/// Coordinate components T(k, i, j) = (T_{∂i}∂j)^k (same for A).
geometry::Tensor3 oneill_T_components(const MapPoint& point, const ProjectorField& P);
geometry::Tensor3 oneill_A_components(const MapPoint& point, const ProjectorField& P);

/// Vertical part of [X, Y] for the horizontal fields X = P_H h_i, Y = P_H h_j
/// extended with constant coefficients h_i, h_j.
Vec vertical_bracket(const ProjectorField& P, const Vec& hi, const Vec& hj);

/// max over horizontal pairs of |v[h_i, h_j] − 2A_{h_i}h_j|_{g₁}.
double bracket_residual(const MapPoint& point, const SceneSplit& split);
/// max over horizontal pairs of |v[h_i, h_j]|_{g₁}.
double bracket_verticality(const MapPoint& point, const SceneSplit& split);

}  // namespace qcas::maps
