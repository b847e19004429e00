#include "qcas/maps/fundamental.hpp"

#include "qcas/errors.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <functional>

namespace qcas::maps {

using geometry::inner;

double FundamentalTensor::squared_norm(const MatList& slices) {
    double s = 0.0;
    for (const Mat& m : slices) s += m.squaredNorm();
    return s;
}

double FundamentalTensor::squared_trace_norm(const MatList& slices) {
    double s = 0.0;
    for (const Mat& m : slices) s += m.trace() * m.trace();
    return s;
}

double FundamentalTensor::symmetry_defect(const MatList& slices, double sign) {
    double worst = 0.0;
    for (const Mat& m : slices)
        if (m.size() > 0) worst = std::max(worst, (m - sign * m.transpose()).cwiseAbs().maxCoeff());
    return worst;
}

Vec map_second_fundamental(const MapPoint& point, const Vec& X, const Vec& Y) {
    const Mat& J = point.F.jacobian;
    const int n2 = static_cast<int>(J.rows());
    Vec out(n2);
    for (int a = 0; a < n2; ++a) out(a) = X.dot(point.F.hessians[static_cast<std::size_t>(a)] * Y);
    out += point.target.apply(J * X, J * Y);
    out -= J * point.source.apply(X, Y);
    return out;
}

MatList second_fundamental_form(const MapPoint& point, const SceneSplit& split) {
    const auto& h = split.horizontal.vectors;
    const int s = split.horizontal.size();
    std::vector<std::vector<Vec>> values(static_cast<std::size_t>(s), std::vector<Vec>(static_cast<std::size_t>(s)));
    for (int i = 0; i < s; ++i)
        for (int j = i; j < s; ++j) {
            values[i][j] = map_second_fundamental(point, h[i], h[j]);
            values[j][i] = values[i][j];
        }
    MatList B;
    for (const Vec& V : split.range_perp.vectors) {
        Mat slice(s, s);
        for (int i = 0; i < s; ++i)
            for (int j = 0; j < s; ++j) slice(i, j) = inner(point.g2(), values[i][j], V);
        B.push_back(slice);
    }
    return B;
}

Mat ProjectorField::directional(const Vec& X) const {
    Mat out = Mat::Zero(PH.rows(), PH.cols());
    for (std::size_t m = 0; m < dPH.size(); ++m)
        if (X(static_cast<Eigen::Index>(m)) != 0.0) out += X(static_cast<Eigen::Index>(m)) * dPH[m];
    return out;
}

ProjectorField projector_field(const MapPoint& point) {
    const Mat& J = point.F.jacobian;
    const Mat& G = point.source.g_inv;
    const int n1 = static_cast<int>(J.cols());
    const Mat M = J * G * J.transpose();
    Eigen::FullPivLU<Mat> lu(M);
    if (!lu.isInvertible()) throw RankError("projector field needs a surjective differential");
    const Mat Mi = lu.inverse();

    ProjectorField P;
    P.PH = G * J.transpose() * Mi * J;
    P.dPH.reserve(static_cast<std::size_t>(n1));
    for (int m = 0; m < n1; ++m) {
        Mat dJ(J.rows(), J.cols());
        for (Eigen::Index a = 0; a < J.rows(); ++a) dJ.row(a) = point.F.hessians[static_cast<std::size_t>(a)].col(m).transpose();
        const Mat dG = -G * point.source_metric.dg[static_cast<std::size_t>(m)] * G;
        const Mat dM = dJ * G * J.transpose() + J * dG * J.transpose() + J * G * dJ.transpose();
        const Mat dMi = -Mi * dM * Mi;
        P.dPH.push_back(dG * J.transpose() * Mi * J + G * dJ.transpose() * Mi * J + G * J.transpose() * dMi * J +
                        G * J.transpose() * Mi * dJ);
    }
    return P;
}

Vec oneill_T_vector(const MapPoint& point, const ProjectorField& P, const Vec& E, const Vec& F) {
    const Mat PV = P.PV();
    const Vec a = PV * E;
    const Mat dP = P.directional(a);
    const Vec vF = PV * F;
    const Vec hF = P.PH * F;
    const Vec nabla_vF = -dP * F + point.source.apply(a, vF);
    const Vec nabla_hF = dP * F + point.source.apply(a, hF);
    return P.PH * nabla_vF + PV * nabla_hF;
}

Vec oneill_A_vector(const MapPoint& point, const ProjectorField& P, const Vec& E, const Vec& F) {
    const Mat PV = P.PV();
    const Vec a = P.PH * E;
    const Mat dP = P.directional(a);
    const Vec vF = PV * F;
    const Vec hF = P.PH * F;
    const Vec nabla_hF = dP * F + point.source.apply(a, hF);
    const Vec nabla_vF = -dP * F + point.source.apply(a, vF);
    return PV * nabla_hF + P.PH * nabla_vF;
}

namespace {

MatList slices(const MapPoint& point, const VecList& index_frame, const VecList& slot_frame,
               const std::function<Vec(const Vec&, const Vec&)>& tensor) {
    const int k = static_cast<int>(slot_frame.size());
    std::vector<std::vector<Vec>> values(static_cast<std::size_t>(k), std::vector<Vec>(static_cast<std::size_t>(k)));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) values[i][j] = tensor(slot_frame[i], slot_frame[j]);
    MatList out;
    for (const Vec& e : index_frame) {
        Mat slice(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) slice(i, j) = inner(point.g1(), values[i][j], e);
        out.push_back(slice);
    }
    return out;
}

geometry::Tensor3 components(const MapPoint& point, const std::function<Vec(const Vec&, const Vec&)>& tensor) {
    const int n = static_cast<int>(point.x.size());
    geometry::Tensor3 out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Vec v = tensor(Vec::Unit(n, i), Vec::Unit(n, j));
            for (int k = 0; k < n; ++k) out(k, i, j) = v(k);
        }
    return out;
}

}  // namespace

MatList oneill_T(const MapPoint& point, const SceneSplit& split) {
    const ProjectorField P = projector_field(point);
    return slices(point, split.horizontal.vectors, split.vertical.vectors,
                  [&](const Vec& E, const Vec& F) { return oneill_T_vector(point, P, E, F); });
}

MatList oneill_A(const MapPoint& point, const SceneSplit& split) {
    const ProjectorField P = projector_field(point);
    return slices(point, split.vertical.vectors, split.horizontal.vectors,
                  [&](const Vec& E, const Vec& F) { return oneill_A_vector(point, P, E, F); });
}

MatList oneill_T_via_map(const MapPoint& point, const SceneSplit& split) {
    const auto& v = split.vertical.vectors;
    const int l = split.vertical.size();
    MatList out;
    for (int alpha = 0; alpha < split.horizontal.size(); ++alpha) {
        const Vec Fh = split.range.vectors[static_cast<std::size_t>(alpha)];
        Mat slice(l, l);
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < l; ++j) slice(i, j) = -inner(point.g2(), map_second_fundamental(point, v[i], v[j]), Fh);
        out.push_back(slice);
    }
    return out;
}

geometry::Tensor3 oneill_T_components(const MapPoint& point, const ProjectorField& P) {
    return components(point, [&](const Vec& E, const Vec& F) { return oneill_T_vector(point, P, E, F); });
}

geometry::Tensor3 oneill_A_components(const MapPoint& point, const ProjectorField& P) {
    return components(point, [&](const Vec& E, const Vec& F) { return oneill_A_vector(point, P, E, F); });
}

Vec vertical_bracket(const ProjectorField& P, const Vec& hi, const Vec& hj) {
    const Vec X = P.PH * hi;
    const Vec Y = P.PH * hj;
    const Vec bracket = P.directional(X) * hj - P.directional(Y) * hi;
    return P.PV() * bracket;
}

double bracket_residual(const MapPoint& point, const SceneSplit& split) {
    const ProjectorField P = projector_field(point);
    const auto& h = split.horizontal.vectors;
    double worst = 0.0;
    for (std::size_t i = 0; i < h.size(); ++i)
        for (std::size_t j = i + 1; j < h.size(); ++j) {
            const Vec d = vertical_bracket(P, h[i], h[j]) - 2.0 * oneill_A_vector(point, P, h[i], h[j]);
            worst = std::max(worst, std::sqrt(std::max(0.0, inner(point.g1(), d, d))));
        }
    return worst;
}

double bracket_verticality(const MapPoint& point, const SceneSplit& split) {
    const ProjectorField P = projector_field(point);
    const auto& h = split.horizontal.vectors;
    double worst = 0.0;
    for (std::size_t i = 0; i < h.size(); ++i)
        for (std::size_t j = i + 1; j < h.size(); ++j) {
            const Vec d = vertical_bracket(P, h[i], h[j]);
            worst = std::max(worst, std::sqrt(std::max(0.0, inner(point.g1(), d, d))));
        }
    return worst;
}

}  // namespace qcas::maps
