#pragma once

#include "qcas/geometry/frame.hpp"
#include "qcas/maps/smooth_map.hpp"

namespace qcas::maps {

/// Orthonormal frames for ker F∗ ⊕ (ker F∗)^⊥ in the source and
/// range F∗ ⊕ (range F∗)^⊥ in the target.
struct SceneSplit {
    geometry::OrthoFrame vertical;
    geometry::OrthoFrame horizontal;
    geometry::OrthoFrame range;       ///< range.vectors[i] = F∗ horizontal.vectors[i]
    geometry::OrthoFrame range_perp;
};

struct SplitOptions {
    double kernel_threshold = 1e-8;
    double isometry_tolerance = 1e-6;
};

struct Differential {
    Mat jacobian;
    Vec singular_values;
    int numerical_rank = 0;
    double isometry_defect = 0.0;  ///< max |g₂(F∗h_i, F∗h_j) − δ_ij|
    SceneSplit split;
};

/// Throws RankError when the numerical rank differs from the declared rank and
/// NotRiemannianMapError when F∗ is not isometric on (ker F∗)^⊥.
Differential differential(const SmoothMap& map, const MapPoint& point, const SplitOptions& options = {});
Differential differential(const SmoothMap& map, std::span<const double> x, const SplitOptions& options = {});

/// Invariant defects of a split: mutual orthogonality, orthonormality, and
/// |F∗v| for vertical v.
struct SplitReport {
    double source_orthogonality = 0.0;
    double target_orthogonality = 0.0;
    double kernel_residual = 0.0;
    double worst() const;
};

SplitReport check_split(const SceneSplit& split, const Mat& jacobian, const Mat& g2);

/// Rotates every frame of `split` by an orthogonal matrix within its span.
/// range is rotated with horizontal so that range[i] = F∗ horizontal[i] persists.
SceneSplit rotate_split(const SceneSplit& split, const Mat& horizontal_rotation, const Mat& vertical_rotation,
                        const Mat& range_perp_rotation);

}  // namespace qcas::maps
