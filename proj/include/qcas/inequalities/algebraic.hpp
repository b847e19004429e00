#pragma once

#include "qcas/casorati/extrema.hpp"

namespace qcas::inequalities {

/// Purely algebraic core of the Casorati inequality for a symmetric tensor B
/// over an s-dimensional distribution: lhs = (‖trace B‖² − ‖B‖²)/(s(s−1)).
struct AlgebraicGap {
    double lhs = 0.0;
    double rhs_delta = 0.0;
    double rhs_delta_hat = 0.0;
    double C = 0.0;
    casorati::HyperplaneExtrema extrema;

    double slack_delta() const { return rhs_delta - lhs; }
    double slack_delta_hat() const { return rhs_delta_hat - lhs; }
};

/// Throws DimensionError for s < 3.
AlgebraicGap algebraic_gap(const casorati::CasoratiInput& B, const casorati::ExtremaOptions& options = {});

/// (‖trace h‖² − ‖h‖²) over all slices.
double trace_defect(const casorati::CasoratiInput& h);

}  // namespace qcas::inequalities
