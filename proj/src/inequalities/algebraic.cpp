#include "qcas/inequalities/algebraic.hpp"

#include "qcas/errors.hpp"

namespace qcas::inequalities {

double trace_defect(const casorati::CasoratiInput& h) {
    double tr2 = 0.0;
    for (const Mat& m : h.slices) tr2 += m.trace() * m.trace();
    return tr2 - h.squared_norm();
}

AlgebraicGap algebraic_gap(const casorati::CasoratiInput& B, const casorati::ExtremaOptions& options) {
    const int s = B.n_dist;
    if (s < 3) throw DimensionError("the Casorati inequality needs a distribution of dimension >= 3");
    AlgebraicGap gap;
    gap.lhs = trace_defect(B) / (s * (s - 1.0));
    gap.C = casorati::casorati(B);
    gap.extrema = casorati::hyperplane_extrema(B, options);
    const casorati::DeltaCasorati d = casorati::delta_casorati(gap.C, gap.extrema, s);
    gap.rhs_delta = d.delta;
    gap.rhs_delta_hat = d.delta_hat;
    return gap;
}

}  // namespace qcas::inequalities
