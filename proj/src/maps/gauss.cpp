#include "qcas/maps/gauss.hpp"

#include "qcas/errors.hpp"

#include <algorithm>
#include <cmath>

namespace qcas::maps {

using geometry::inner;

FiberModel FiberModel::parse(const std::string& text, int source_dim) {
    FiberModel m;
    if (text == "derived") {
        m.kind = Kind::Derived;
    } else if (text == "flat") {
        m.kind = Kind::Flat;
    } else if (text == "round-sphere") {
        m.kind = Kind::RoundSphere;
        m.center = Vec::Zero(source_dim);
    } else {
        throw ConfigurationError("unknown fiber curvature model '" + text + "'");
    }
    return m;
}

std::string FiberModel::name() const {
    switch (kind) {
        case Kind::Flat: return "flat";
        case Kind::RoundSphere: return "round-sphere";
        default: return "derived";
    }
}

double fiber_curvature(const FiberModel& model, const MapPoint& point, const ProjectorField& P, const Vec& F1,
                       const Vec& F2, const Vec& F3, const Vec& F4) {
    const Mat& g = point.g1();
    switch (model.kind) {
        case FiberModel::Kind::Flat:
            return 0.0;
        case FiberModel::Kind::RoundSphere: {
            const double r2 = (point.x - model.center).squaredNorm();
            if (r2 == 0.0) throw DomainError("round-sphere fiber model is singular at its center");
            return (inner(g, F2, F3) * inner(g, F1, F4) - inner(g, F1, F3) * inner(g, F2, F4)) / r2;
        }
        case FiberModel::Kind::Derived:
            break;
    }
    const Vec T14 = oneill_T_vector(point, P, F1, F4);
    const Vec T23 = oneill_T_vector(point, P, F2, F3);
    const Vec T24 = oneill_T_vector(point, P, F2, F4);
    const Vec T13 = oneill_T_vector(point, P, F1, F3);
    return point.R1(F1, F2, F3, F4) + inner(g, T14, T23) - inner(g, T24, T13);
}

double fiber_scalar_curvature(const FiberModel& model, const MapPoint& point, const SceneSplit& split) {
    const ProjectorField P = projector_field(point);
    const auto& v = split.vertical.vectors;
    double sum = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            if (i != j) sum += fiber_curvature(model, point, P, v[i], v[j], v[j], v[i]);
    return sum;
}

double gauss_residual_map(const MapPoint& point, const SceneSplit& split, const MatList& B) {
    const auto& h = split.horizontal.vectors;
    const auto& Fh = split.range.vectors;
    const int s = split.horizontal.size();
    auto bb = [&](int i, int j, int k, int l) {
        double sum = 0.0;
        for (const Mat& slice : B) sum += slice(i, j) * slice(k, l);
        return sum;
    };
    double worst = 0.0;
    for (int a = 0; a < s; ++a)
        for (int b = 0; b < s; ++b)
            for (int c = 0; c < s; ++c)
                for (int d = 0; d < s; ++d) {
                    const double lhs = point.R2(Fh[a], Fh[b], Fh[c], Fh[d]);
                    const double rhs = point.R1(h[a], h[b], h[c], h[d]) + bb(a, c, b, d) - bb(a, d, b, c);
                    worst = std::max(worst, std::abs(lhs - rhs));
                }
    return worst;
}

double gauss_residual_map(const MapPoint& point, const SceneSplit& split) {
    return gauss_residual_map(point, split, second_fundamental_form(point, split));
}

namespace {

/// (∇_X S)(Y, Z) for a (1,2)-tensor with coordinate components S at the point
/// and central-difference partials dS[m].
Vec covariant_derivative(const geometry::Connection& conn, const geometry::Tensor3& S,
                         const std::vector<geometry::Tensor3>& dS, const Vec& X, const Vec& Y, const Vec& Z) {
    Vec out = Vec::Zero(Y.size());
    for (std::size_t m = 0; m < dS.size(); ++m) {
        const double xm = X(static_cast<Eigen::Index>(m));
        if (xm != 0.0) out += xm * dS[m].contract(Y, Z);
    }
    out += conn.apply(X, S.contract(Y, Z));
    out -= S.contract(conn.apply(X, Y), Z);
    out -= S.contract(Y, conn.apply(X, Z));
    return out;
}

struct TensorDerivatives {
    std::vector<geometry::Tensor3> dT;
    std::vector<geometry::Tensor3> dA;
};

TensorDerivatives differentiate(const SmoothMap& map, const MapPoint& point, double h) {
    const int n = static_cast<int>(point.x.size());
    TensorDerivatives out;
    for (int m = 0; m < n; ++m) {
        Vec xp = point.x, xm = point.x;
        xp(m) += h;
        xm(m) -= h;
        const MapPoint pp = evaluate_point(map, std::span<const double>(xp.data(), static_cast<std::size_t>(n)));
        const MapPoint pm = evaluate_point(map, std::span<const double>(xm.data(), static_cast<std::size_t>(n)));
        const ProjectorField Pp = projector_field(pp), Pm = projector_field(pm);
        const geometry::Tensor3 Tp = oneill_T_components(pp, Pp), Tm = oneill_T_components(pm, Pm);
        const geometry::Tensor3 Ap = oneill_A_components(pp, Pp), Am = oneill_A_components(pm, Pm);
        geometry::Tensor3 dT(n), dA(n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) {
                    dT(a, b, c) = (Tp(a, b, c) - Tm(a, b, c)) / (2.0 * h);
                    dA(a, b, c) = (Ap(a, b, c) - Am(a, b, c)) / (2.0 * h);
                }
        out.dT.push_back(std::move(dT));
        out.dA.push_back(std::move(dA));
    }
    return out;
}

}  // namespace

SubmersionResiduals gauss_residual_submersion(const SmoothMap& map, const MapPoint& point, const SceneSplit& split,
                                              const FiberModel& fiber, double h) {
    const ProjectorField P = projector_field(point);
    const Mat& g = point.g1();
    const auto& v = split.vertical.vectors;
    const auto& hz = split.horizontal.vectors;
    const auto& Fh = split.range.vectors;
    SubmersionResiduals out;

    auto T = [&](const Vec& E, const Vec& F) { return oneill_T_vector(point, P, E, F); };
    auto A = [&](const Vec& E, const Vec& F) { return oneill_A_vector(point, P, E, F); };

    for (const Vec& F1 : v)
        for (const Vec& F2 : v)
            for (const Vec& F3 : v)
                for (const Vec& F4 : v) {
                    const double lhs = point.R1(F1, F2, F3, F4);
                    const double rhs = fiber_curvature(fiber, point, P, F1, F2, F3, F4) -
                                       inner(g, T(F1, F4), T(F2, F3)) + inner(g, T(F2, F4), T(F1, F3));
                    out.vertical = std::max(out.vertical, std::abs(lhs - rhs));
                }

    const std::size_t s = hz.size();
    for (std::size_t a = 0; a < s; ++a)
        for (std::size_t b = 0; b < s; ++b)
            for (std::size_t c = 0; c < s; ++c)
                for (std::size_t d = 0; d < s; ++d) {
                    const Vec &X1 = hz[a], &X2 = hz[b], &X3 = hz[c], &X4 = hz[d];
                    const double lhs = point.R1(X1, X2, X3, X4);
                    const double rhs = point.R2(Fh[a], Fh[b], Fh[c], Fh[d]) + 2.0 * inner(g, A(X1, X2), A(X3, X4)) -
                                       inner(g, A(X2, X3), A(X1, X4)) + inner(g, A(X1, X3), A(X2, X4));
                    out.horizontal = std::max(out.horizontal, std::abs(lhs - rhs));
                }

    if (!v.empty() && !hz.empty()) {
        const geometry::Tensor3 Tc = oneill_T_components(point, P);
        const geometry::Tensor3 Ac = oneill_A_components(point, P);
        const TensorDerivatives d = differentiate(map, point, h);
        for (const Vec& X1 : hz)
            for (const Vec& X2 : hz)
                for (const Vec& F1 : v)
                    for (const Vec& F2 : v) {
                        const double lhs = point.R1(X1, F1, F2, X2);
                        const double rhs = inner(g, covariant_derivative(point.source, Tc, d.dT, X1, F1, F2), X2) +
                                           inner(g, covariant_derivative(point.source, Ac, d.dA, F1, X1, X2), F2) -
                                           inner(g, T(F1, X1), T(F2, X2)) + inner(g, A(X2, F2), A(X1, F1));
                        out.mixed = std::max(out.mixed, std::abs(lhs - rhs));
                    }
    }
    return out;
}

}  // namespace qcas::maps
