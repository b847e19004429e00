#pragma once

#include "qcas/casorati/casorati.hpp"

#include <cstdint>

namespace qcas::casorati {

struct ExtremaOptions {
    int starts = 64;
    int max_iterations = 5000;
    double gradient_tolerance = 1e-10;  ///< relative to max(1, C)
    /// Dense-sampling certification, only performed for n_dist ≤ 5.
    bool certify = true;
    int certification_samples = 100000;
    std::uint64_t seed = 0x5eedULL;
};

/// Which multi-start run produced an extremum, for audit trails.
struct ExtremumAudit {
    int start_index = -1;
    int iterations = 0;
    double gradient_norm = 0.0;
    bool degenerate = false;  ///< near-equal values reached in clearly different directions
};

struct HyperplaneExtrema {
    double inf_CL = 0.0;
    double sup_CL = 0.0;
    Vec argmin_normal;
    Vec argmax_normal;
    bool certified = false;
    double certified_gap = 0.0;  ///< max distance between optimizer and sampled extrema
    ExtremumAudit min_audit;
    ExtremumAudit max_audit;
};

/// The quartic u ↦ C^L of the hyperplane u^⊥ and its Euclidean gradient.
double hyperplane_objective(const CasoratiInput& input, const Vec& u, Vec* gradient = nullptr);

/// inf and sup of C^L over all hyperplanes of the distribution, by multi-start
/// projected gradient on the unit sphere of normals. Throws DimensionError for
/// n_dist < 3 and OptimizationError if no start converges.
HyperplaneExtrema hyperplane_extrema(const CasoratiInput& input, const ExtremaOptions& options = {});

/// δ_C = C/2 + ((n+1)/(2n)) inf C^L and δ̂_C = 2C − ((2n−1)/(2n)) sup C^L.
struct DeltaCasorati {
    double delta = 0.0;
    double delta_hat = 0.0;
};

DeltaCasorati delta_casorati(double C, const HyperplaneExtrema& extrema, int n_dist);

}  // namespace qcas::casorati
