#pragma once

#include "qcas/inequalities/scene_data.hpp"

#include <cstdint>
#include <random>

namespace qcas::inequalities {

struct RandomSceneSpec {
    int dim = 8;         ///< 4m
    int first_dim = 4;   ///< range or horizontal dimension; the complement fills the rest
    double c = 0.0;
    std::uint64_t seed = 1;
    double entry_bound = 1.0;  ///< tensor entries uniform in [−bound, bound]
};

/// Random orthonormal split of ℝ^{dim} with the quaternion-unit structure and
/// random B, T (symmetric) and A (skew) slices.
PointwiseScene random_scene(const RandomSceneSpec& spec);

/// Haar-distributed orthogonal matrix.
Mat random_orthogonal(int n, std::mt19937_64& rng);
Mat random_symmetric(int n, double bound, std::mt19937_64& rng);
Mat random_skew(int n, double bound, std::mt19937_64& rng);

}  // namespace qcas::inequalities
