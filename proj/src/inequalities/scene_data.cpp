#include "qcas/inequalities/scene_data.hpp"

#include "qcas/errors.hpp"
#include "qcas/inequalities/algebraic.hpp"
#include "qcas/quaternionic/qsf.hpp"

#include <cmath>

namespace qcas::inequalities {

namespace {

Mat metric_of(const PointwiseScene& scene) {
    return scene.metric.size() > 0 ? scene.metric : Mat::Identity(scene.structure.dim(), scene.structure.dim());
}

void check_slices(const MatList& slices, int count, int size, const char* name) {
    if (static_cast<int>(slices.size()) > count)
        throw DimensionError(std::string(name) + " has more slices than normal directions");
    for (const Mat& m : slices)
        if (m.rows() != size || m.cols() != size)
            throw DimensionError(std::string(name) + " slices must be " + std::to_string(size) + "x" + std::to_string(size));
}

casorati::CasoratiInput input_of(const MatList& slices, int n) { return casorati::CasoratiInput(slices, n); }

geometry::OrthoFrame joined(const geometry::OrthoFrame& a, const geometry::OrthoFrame& b) {
    geometry::OrthoFrame out{a.vectors, a.metric_at};
    out.vectors.insert(out.vectors.end(), b.vectors.begin(), b.vectors.end());
    return out;
}

/// Deviation of a chart curvature tensor from the space form over a full frame.
double chart_mismatch(const geometry::Tensor4& R, const Mat& g, const geometry::OrthoFrame& full,
                      const quaternionic::QuaternionicStructure* structure, double c) {
    const geometry::CurvatureForm form = [&R](const Vec& a, const Vec& b, const Vec& x, const Vec& y) {
        return R.contract(a, b, x, y);
    };
    if (structure) {
        if (structure->dim() != g.rows()) throw StructureError("structure dimension differs from the chart dimension");
        quaternionic::require_quaternionic_structure(*structure, g, 1e-8);
        const quaternionic::QSFOracle oracle(c, *structure, g);
        return quaternionic::space_form_mismatch(form, oracle, full);
    }
    if (c != 0.0) throw ConfigurationError("c != 0 needs a quaternionic structure");
    double worst = 0.0;
    for (const Vec& a : full.vectors)
        for (const Vec& b : full.vectors)
            for (const Vec& x : full.vectors)
                for (const Vec& y : full.vectors) worst = std::max(worst, std::abs(form(a, b, x, y)));
    return worst;
}

}  // namespace

void validate(const PointwiseScene& scene) {
    const Mat g = metric_of(scene);
    const int n = scene.structure.dim();
    if (g.rows() != n || g.cols() != n) throw DimensionError("metric and structure dimensions differ");
    quaternionic::require_quaternionic_structure(scene.structure, g);
    for (const auto* frame : {&scene.first, &scene.second})
        for (const Vec& v : frame->vectors)
            if (v.size() != n) throw DimensionError("frame vector has the wrong dimension");
    const geometry::OrthoFrame all = joined(geometry::OrthoFrame{scene.first.vectors, g}, scene.second);
    if (all.orthonormality_defect() > 1e-10) throw FrameError("scene frames are not orthonormal");
    const int a = scene.first.size(), b = scene.second.size();
    check_slices(scene.B, b, a, "B");
    check_slices(scene.T, a, b, "T");
    check_slices(scene.A, b, a, "A");
    for (const Mat& m : scene.B)
        if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-9) throw StructureError("B slices must be symmetric");
    for (const Mat& m : scene.T)
        if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-9) throw StructureError("T slices must be symmetric");
    for (const Mat& m : scene.A)
        if ((m + m.transpose()).cwiseAbs().maxCoeff() > 1e-9) throw StructureError("A slices must be skew-symmetric");
}

MapPointData map_data(const PointwiseScene& scene) {
    validate(scene);
    const Mat g = metric_of(scene);
    const geometry::OrthoFrame range{scene.first.vectors, g};
    const geometry::OrthoFrame perp{scene.second.vectors, g};
    const quaternionic::QSFOracle oracle(scene.c, scene.structure, g);
    MapPointData d;
    d.c = scene.c;
    d.B = input_of(scene.B, range.size());
    d.two_tau_R = geometry::scalar_curvature_of_frame(oracle.form(), range);
    d.two_tau_H = d.two_tau_R + trace_defect(d.B);
    d.norms_PR = quaternionic::decompose_J(scene.structure, range, perp).norms_P;
    return d;
}

SubmersionPointData submersion_data(const PointwiseScene& scene) {
    validate(scene);
    const Mat g = metric_of(scene);
    const geometry::OrthoFrame hor{scene.first.vectors, g};
    const geometry::OrthoFrame ver{scene.second.vectors, g};
    const quaternionic::QSFOracle oracle(scene.c, scene.structure, g);
    const geometry::CurvatureForm R = oracle.form();
    SubmersionPointData d;
    d.c = scene.c;
    d.T = input_of(scene.T, ver.size());
    d.A = input_of(scene.A, hor.size());
    d.two_tau_H_N1 = geometry::scalar_curvature_of_frame(R, hor);
    d.two_tau_V_N1 = geometry::scalar_curvature_of_frame(R, ver);
    d.mixed = geometry::mixed_scalar(R, hor, ver);
    d.two_tau_ker = d.two_tau_V_N1 + trace_defect(d.T);
    d.two_tau_perp = d.two_tau_H_N1 + 3.0 * d.A.squared_norm();
    const quaternionic::JDecomposition J = quaternionic::decompose_J(scene.structure, hor, ver);
    d.norms_P = J.norms_P;
    d.norms_Q = J.norms_Q;
    d.norms_PV = J.norms_PV;
    return d;
}

MapPointData map_data(const maps::MapPoint& point, const maps::SceneSplit& split,
                      const quaternionic::QuaternionicStructure* target_structure, double c, double tolerance) {
    MapPointData d;
    d.c = c;
    d.space_form_mismatch =
        chart_mismatch(point.target_riemann, point.g2(), joined(split.range, split.range_perp), target_structure, c);
    if (d.space_form_mismatch > tolerance)
        throw OracleError("target curvature deviates from the space form by " + std::to_string(d.space_form_mismatch));
    const geometry::CurvatureForm R1 = [&point](const Vec& a, const Vec& b, const Vec& x, const Vec& y) {
        return point.R1(a, b, x, y);
    };
    const geometry::CurvatureForm R2 = [&point](const Vec& a, const Vec& b, const Vec& x, const Vec& y) {
        return point.R2(a, b, x, y);
    };
    d.B = input_of(maps::second_fundamental_form(point, split), split.horizontal.size());
    d.two_tau_H = geometry::scalar_curvature_of_frame(R1, split.horizontal);
    d.two_tau_R = geometry::scalar_curvature_of_frame(R2, split.range);
    if (target_structure) d.norms_PR = quaternionic::decompose_J(*target_structure, split.range, split.range_perp).norms_P;
    return d;
}

SubmersionPointData submersion_data(const maps::MapPoint& point, const maps::SceneSplit& split,
                                    const maps::FiberModel& fiber,
                                    const quaternionic::QuaternionicStructure* source_structure, double c,
                                    double tolerance) {
    SubmersionPointData d;
    d.c = c;
    d.space_form_mismatch =
        chart_mismatch(point.source_riemann, point.g1(), joined(split.horizontal, split.vertical), source_structure, c);
    if (d.space_form_mismatch > tolerance)
        throw OracleError("source curvature deviates from the space form by " + std::to_string(d.space_form_mismatch));
    const geometry::CurvatureForm R1 = [&point](const Vec& a, const Vec& b, const Vec& x, const Vec& y) {
        return point.R1(a, b, x, y);
    };
    const geometry::CurvatureForm R2 = [&point](const Vec& a, const Vec& b, const Vec& x, const Vec& y) {
        return point.R2(a, b, x, y);
    };
    d.T = input_of(maps::oneill_T(point, split), split.vertical.size());
    d.A = input_of(maps::oneill_A(point, split), split.horizontal.size());
    d.two_tau_H_N1 = geometry::scalar_curvature_of_frame(R1, split.horizontal);
    d.two_tau_V_N1 = geometry::scalar_curvature_of_frame(R1, split.vertical);
    d.mixed = geometry::mixed_scalar(R1, split.horizontal, split.vertical);
    d.two_tau_ker = maps::fiber_scalar_curvature(fiber, point, split);
    d.two_tau_perp = geometry::scalar_curvature_of_frame(R2, split.range);
    d.bracket_verticality = maps::bracket_verticality(point, split);
    if (source_structure) {
        const quaternionic::JDecomposition J = quaternionic::decompose_J(*source_structure, split.horizontal, split.vertical);
        d.norms_P = J.norms_P;
        d.norms_Q = J.norms_Q;
        d.norms_PV = J.norms_PV;
    }
    return d;
}

}  // namespace qcas::inequalities
