#pragma once

#include "qcas/inequalities/theorems.hpp"
#include "qcas/maps/gauss.hpp"
#include "qcas/quaternionic/decomposition.hpp"

#include <optional>

namespace qcas::inequalities {

/// A single tangent space of a quaternionic space form with explicit frames
/// and fundamental tensors. Curvature comes from the space-form oracle and the
/// intrinsic scalar curvatures are reconstructed through the Gauss-type
/// identities.
struct PointwiseScene {
    double c = 0.0;
    quaternionic::QuaternionicStructure structure = quaternionic::QuaternionicStructure::quat_flat(1);
    Mat metric;                  ///< defaults to the identity
    geometry::OrthoFrame first;  ///< range (map) or horizontal (submersion)
    geometry::OrthoFrame second; ///< range⊥ (map) or vertical (submersion)
    MatList B;                   ///< slices over `second`, each |first|×|first|
    MatList T;                   ///< slices over `first`, each |second|×|second|
    MatList A;                   ///< slices over `second`, each |first|×|first|
};

/// Validates dimensions, the structure and the frames; throws the matching error.
void validate(const PointwiseScene& scene);

MapPointData map_data(const PointwiseScene& scene);
SubmersionPointData submersion_data(const PointwiseScene& scene);

/// Chart-mode builders. When `structure` is null the space is only accepted
/// with c = 0, checked against vanishing curvature. Throws OracleError when the
/// curvature deviates from the space form by more than `tolerance`.
MapPointData map_data(const maps::MapPoint& point, const maps::SceneSplit& split,
                      const quaternionic::QuaternionicStructure* target_structure, double c, double tolerance = 1e-6);
SubmersionPointData submersion_data(const maps::MapPoint& point, const maps::SceneSplit& split,
                                    const maps::FiberModel& fiber,
                                    const quaternionic::QuaternionicStructure* source_structure, double c,
                                    double tolerance = 1e-6);

}  // namespace qcas::inequalities
