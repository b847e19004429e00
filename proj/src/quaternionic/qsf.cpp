#include "qcas/quaternionic/qsf.hpp"

#include "qcas/errors.hpp"

#include <cmath>

namespace qcas::quaternionic {

QSFOracle::QSFOracle(double c_, QuaternionicStructure s, Mat g)
    : c(c_), structure(std::move(s)), metric_at(std::move(g)) {
    if (metric_at.rows() != structure.dim() || metric_at.cols() != structure.dim())
        throw DimensionError("space-form oracle: metric and structure sizes differ");
}

double QSFOracle::operator()(const Vec& z1, const Vec& z2, const Vec& z3, const Vec& z4) const {
    const Mat& g = metric_at;
    auto ip = [&g](const Vec& a, const Vec& b) { return a.dot(g * b); };

    double real_part = ip(z2, z3) * ip(z1, z4) - ip(z1, z3) * ip(z2, z4);
    double quat_part = 0.0;
    for (int a = 0; a < 3; ++a) {
        const Mat& J = structure.J(a);
        const Vec J1 = J * z1, J2 = J * z2, J3 = J * z3;
        quat_part += ip(z1, J3) * ip(J2, z4) - ip(z2, J3) * ip(J1, z4) + 2.0 * ip(z1, J2) * ip(J3, z4);
    }
    return 0.25 * c * (real_part + quat_part);
}

geometry::Tensor4 QSFOracle::components() const {
    const int n = structure.dim();
    geometry::Tensor4 R(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    R(i, j, k, l) = (*this)(Vec::Unit(n, i), Vec::Unit(n, j), Vec::Unit(n, k), Vec::Unit(n, l));
    return R;
}

geometry::CurvatureForm QSFOracle::form() const {
    return [this](const Vec& a, const Vec& b, const Vec& c3, const Vec& d) { return (*this)(a, b, c3, d); };
}

double qsf_curvature(const QSFOracle& oracle, const Vec& z1, const Vec& z2, const Vec& z3, const Vec& z4) {
    return oracle(z1, z2, z3, z4);
}

double space_form_mismatch(const geometry::CurvatureForm& R, const QSFOracle& oracle,
                           const geometry::OrthoFrame& frame) {
    double worst = 0.0;
    const auto& e = frame.vectors;
    const int n = frame.size();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d)
                    worst = std::max(worst, std::abs(R(e[a], e[b], e[c], e[d]) - oracle(e[a], e[b], e[c], e[d])));
    return worst;
}

}  // namespace qcas::quaternionic
