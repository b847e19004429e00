#include "support.hpp"

#include "qcas/errors.hpp"
#include "qcas/inequalities/algebraic.hpp"
#include "qcas/inequalities/random_scene.hpp"
#include "qcas/inequalities/scene_data.hpp"

#include <gtest/gtest.h>

using namespace qcas;
using namespace qcas::inequalities;

namespace {

Mat diag(std::initializer_list<double> xs) {
    Vec v(static_cast<Eigen::Index>(xs.size()));
    int i = 0;
    for (double x : xs) v(i++) = x;
    return v.asDiagonal();
}

casorati::ExtremaOptions quick() {
    casorati::ExtremaOptions o;
    o.certify = false;
    return o;
}

CheckOptions quick_check() {
    CheckOptions o;
    o.extrema = quick();
    return o;
}

/// ℝ⁸ with the standard frame split into the first `a` and the remaining vectors.
PointwiseScene coordinate_scene(double c, int a) {
    PointwiseScene s;
    s.c = c;
    s.structure = quaternionic::QuaternionicStructure::quat_flat(2);
    s.metric = Mat::Identity(8, 8);
    s.first = qcas::test::columns(s.metric, 0, a, s.metric);
    s.second = qcas::test::columns(s.metric, a, 8 - a, s.metric);
    return s;
}

}  // namespace

TEST(Algebraic, ZeroTensor) {
    const AlgebraicGap g = algebraic_gap(casorati::CasoratiInput::from({Mat::Zero(4, 4)}));
    EXPECT_EQ(g.lhs, 0.0);
    EXPECT_EQ(g.rhs_delta, 0.0);
    EXPECT_EQ(classify(g.lhs, g.rhs_delta, 1e-10), Verdict::Equality);
}

TEST(Algebraic, EqualityPattern) {
    const casorati::CasoratiInput B = casorati::CasoratiInput::from({diag({1, 1, 1, 2})});
    EXPECT_DOUBLE_EQ(trace_defect(B), 25.0 - 7.0);
    const AlgebraicGap g = algebraic_gap(B);
    EXPECT_DOUBLE_EQ(g.lhs, 1.5);
    EXPECT_NEAR(g.rhs_delta, 1.5, 1e-10);
    EXPECT_NEAR(g.C, 7.0 / 4.0, 1e-15);
    EXPECT_GT(g.slack_delta_hat(), 0.1);
}

TEST(Algebraic, SmallDistributionThrows) {
    EXPECT_THROW(algebraic_gap(casorati::CasoratiInput::from({Mat::Identity(2, 2)})), DimensionError);
}

TEST(Algebraic, QuadraticScaling) {
    std::mt19937_64 rng(31);
    const casorati::CasoratiInput B = casorati::CasoratiInput::from({random_symmetric(5, 1.0, rng)});
    const AlgebraicGap g1 = algebraic_gap(B, quick());
    const AlgebraicGap g3 = algebraic_gap(B.scaled(3.0), quick());
    EXPECT_NEAR(g3.lhs, 9.0 * g1.lhs, 1e-10);
    EXPECT_NEAR(g3.rhs_delta, 9.0 * g1.rhs_delta, 1e-8);
    EXPECT_NEAR(g3.rhs_delta_hat, 9.0 * g1.rhs_delta_hat, 1e-8);
}

TEST(Algebraic, RandomTensorsRespectBothBounds) {
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 60; ++trial) {
        const int s = 4 + trial % 3;
        MatList slices;
        for (int k = 0; k <= trial % 3; ++k) slices.push_back(random_symmetric(s, 1.0, rng));
        const AlgebraicGap g = algebraic_gap(casorati::CasoratiInput(slices, s), quick());
        EXPECT_GE(g.slack_delta(), -1e-9);
        EXPECT_GE(g.slack_delta_hat(), -1e-9);
    }
}

TEST(Classify, Thresholds) {
    EXPECT_EQ(classify(1.0, 1.0 + 1e-12, 1e-10), Verdict::Equality);
    EXPECT_EQ(classify(1.0, 1.1, 1e-10), Verdict::Strict);
    EXPECT_EQ(classify(1.0, 0.9, 1e-10), Verdict::Violated);
    EXPECT_EQ(classify(1e6, 1e6 + 1e-5, 1e-10), Verdict::Equality);
}

TEST(TheoremIds, RoundTrip) {
    for (TheoremId id : {TheoremId::Map32, TheoremId::Vertical52, TheoremId::Horizontal62, TheoremId::Combined72,
                         TheoremId::LemmaMap31, TheoremId::LemmaVertical51, TheoremId::LemmaHorizontal61,
                         TheoremId::LemmaCombined71})
        EXPECT_EQ(parse_theorem_id(to_string(id)), id);
    EXPECT_FALSE(parse_theorem_id("map").has_value());
}

TEST(MapTheorem, EqualityPatternAtPositiveC) {
    PointwiseScene s = coordinate_scene(4.0, 4);
    s.first = qcas::test::columns(s.metric, 0, 0, s.metric);
    for (int i : {0, 1, 4, 5}) s.first.vectors.push_back(Vec::Unit(8, i));
    s.second.vectors.clear();
    for (int i : {2, 3, 6, 7}) s.second.vectors.push_back(Vec::Unit(8, i));
    s.B = {diag({1, 1, 1, 2})};
    const auto reports = check_map_theorem(map_data(s));
    ASSERT_EQ(reports.size(), 4u);
    const TheoremReport& r = find_report(reports, TheoremId::Map32, Variant::Delta);
    EXPECT_NEAR(r.slack, 0.0, 1e-10);
    EXPECT_EQ(r.verdict, Verdict::Equality);
    EXPECT_NEAR(r.lhs, 3.5, 1e-12);
    EXPECT_LT(r.diagnostics.eigen_pattern_residual, 1e-10);
    const TheoremReport& lemma = find_report(reports, TheoremId::LemmaMap31, Variant::Delta);
    EXPECT_NEAR(lemma.rhs, r.rhs, 1e-10);
}

TEST(MapTheorem, RandomNegativeC) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const PointwiseScene s = random_scene({8, 3 + static_cast<int>(seed % 3), -4.0, seed});
        const MapPointData d = map_data(s);
        for (const TheoremReport& r : check_map_theorem(d, quick_check())) {
            EXPECT_GE(r.slack, -1e-8);
            if (r.theorem == TheoremId::Map32) {
                EXPECT_NEAR(r.term("rho_ambient"), r.term("rho_ambient_closed_form"), 1e-10);
            }
        }
    }
}

TEST(VerticalTheorem, EqualityPattern) {
    PointwiseScene s = coordinate_scene(4.0, 4);
    s.first.vectors = {Vec::Unit(8, 0), Vec::Unit(8, 1), Vec::Unit(8, 4), Vec::Unit(8, 5)};
    s.second.vectors = {Vec::Unit(8, 2), Vec::Unit(8, 3), Vec::Unit(8, 6), Vec::Unit(8, 7)};
    s.T = {diag({1, 1, 1, 2})};
    const auto reports = check_vertical_theorem(submersion_data(s));
    const TheoremReport& r = find_report(reports, TheoremId::Vertical52, Variant::Delta);
    EXPECT_NEAR(r.slack, 0.0, 1e-10);
    EXPECT_EQ(r.verdict, Verdict::Equality);
}

TEST(VerticalTheorem, ZeroTensorIsEquality) {
    const PointwiseScene s = coordinate_scene(0.0, 4);
    const auto reports = check_vertical_theorem(submersion_data(s));
    for (const TheoremReport& r : reports) {
        EXPECT_EQ(r.lhs, 0.0);
        EXPECT_EQ(r.rhs, 0.0);
        EXPECT_EQ(r.verdict, Verdict::Equality);
    }
}

TEST(HorizontalTheorem, ZeroTensorIsEquality) {
    const PointwiseScene s = coordinate_scene(0.0, 4);
    for (const TheoremReport& r : check_horizontal_theorem(submersion_data(s))) EXPECT_EQ(r.verdict, Verdict::Equality);
}

TEST(HorizontalTheorem, NonzeroANeverEquality) {
    std::mt19937_64 rng(33);
    PointwiseScene s = coordinate_scene(-4.0, 4);
    s.A = {random_skew(4, 0.01, rng)};
    const SubmersionPointData d = submersion_data(s);
    for (const TheoremReport& r : check_horizontal_theorem(d)) {
        EXPECT_NE(r.verdict, Verdict::Equality);
        EXPECT_GT(r.diagnostics.A_norm, 0.0);
    }
}

TEST(HorizontalTheorem, IntrinsicCurvatureGainsThreeANormSquared) {
    // R^{H}(X,Y,Y,X) = R¹(X,Y,Y,X) + 3|A_X Y|², so 2τ grows by 3‖A‖² (ordered pairs).
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        PointwiseScene s = random_scene({8, 4, 4.0, seed});
        const SubmersionPointData with = submersion_data(s);
        const double A2 = with.A.squared_norm();
        s.A.clear();
        const SubmersionPointData without = submersion_data(s);
        EXPECT_NEAR(with.two_tau_perp - without.two_tau_perp, 3.0 * A2, 1e-10);
        EXPECT_NEAR(with.two_tau_H_N1, without.two_tau_H_N1, 1e-12);
    }
}

TEST(CombinedTheorem, MissingDeltaNThrows) {
    const PointwiseScene s = coordinate_scene(0.0, 4);
    EXPECT_THROW(check_combined_theorem(submersion_data(s), std::nullopt), ConfigurationError);
}

TEST(CombinedTheorem, ZeroTensorsAtFlatAreEquality) {
    const PointwiseScene s = coordinate_scene(0.0, 4);
    for (const TheoremReport& r : check_combined_theorem(submersion_data(s), 0.0)) {
        EXPECT_EQ(r.lhs, 0.0);
        EXPECT_EQ(r.rhs, 0.0);
    }
}

TEST(CombinedTheorem, PureCurvatureSurplusAtPositiveC) {
    // With T = A = 0 both sides reduce to the c-terms; the coefficient is
    // cross-checked against the explicit sum of the three ambient pieces.
    std::mt19937_64 rng(34);
    for (int trial = 0; trial < 5; ++trial) {
        PointwiseScene s = coordinate_scene(4.0, 3 + trial % 3);
        const Mat Q = qcas::test::random_rotation(8, rng);
        const int a = s.first.size();
        s.first = qcas::test::columns(Q, 0, a, s.metric);
        s.second = qcas::test::columns(Q, a, 8 - a, s.metric);
        const SubmersionPointData d = submersion_data(s);
        const auto reports = check_combined_theorem(d, 0.0);
        const TheoremReport& r = find_report(reports, TheoremId::Combined72, Variant::Delta);
        EXPECT_GE(r.slack, -1e-12);
        EXPECT_LT(r.term("assembly_gap"), 1e-12);

        const double sd = a, ld = 8 - a;
        const quaternionic::JDecomposition J = quaternionic::decompose_J(s.structure, s.first, s.second);
        const double rhoV = 1.0 + 3.0 / (ld * (ld - 1.0)) * J.sum_Q();
        const double rhoH = 1.0 + 3.0 / (sd * (sd - 1.0)) * J.sum_P();
        const double mixed = sd * ld + 3.0 * J.sum_PV();
        const double expected = rhoV / (sd * (sd - 1.0)) + rhoH / (ld * (ld - 1.0)) +
                                2.0 * mixed / (sd * (sd - 1.0) * ld * (ld - 1.0));
        EXPECT_NEAR(r.term("theorem_ambient"), expected, 1e-12);
    }
}

TEST(CombinedTheorem, AssembliesAgreeOnRandomScenes) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const double c = (seed % 3 == 0) ? -4.0 : (seed % 3 == 1 ? 0.0 : 4.0);
        const PointwiseScene s = random_scene({8, 3 + static_cast<int>(seed % 3), c, seed});
        const auto reports = check_combined_theorem(submersion_data(s), 0.0, quick_check());
        EXPECT_LT(reports.front().term("assembly_gap"), 1e-9);
    }
}

TEST(Diagnostics, EqualityPattern) {
    const casorati::CasoratiInput h = casorati::CasoratiInput::from({diag({1, 1, 1, 2})});
    const EqualityDiagnostics d = equality_diagnostics(h, casorati::hyperplane_extrema(h));
    EXPECT_LT(d.offdiag_max, 1e-10);
    EXPECT_LT(d.eigen_pattern_residual, 1e-10);
    EXPECT_LT(d.common_eigendirection_residual, 1e-10);
    EXPECT_LT(d.commutator_max, 1e-10);
    EXPECT_TRUE(d.quasi_umbilical());
    EXPECT_TRUE(d.diagonal());
    EXPECT_TRUE(d.integrable());
}

TEST(Diagnostics, RotatedPatternStillRecognized) {
    std::mt19937_64 rng(35);
    const Mat Q = qcas::test::random_rotation(4, rng);
    const casorati::CasoratiInput h = casorati::CasoratiInput::from({Mat(Q * diag({1, 1, 1, 2}) * Q.transpose())});
    const EqualityDiagnostics d = equality_diagnostics(h, casorati::hyperplane_extrema(h));
    EXPECT_LT(d.eigen_pattern_residual, 1e-8);
    EXPECT_LT(d.offdiag_max, 1e-8);
}

TEST(Diagnostics, UmbilicalFailsPattern) {
    const casorati::CasoratiInput h = casorati::CasoratiInput::from({Mat(Mat::Identity(3, 3) * 2.0)});
    const EqualityDiagnostics d = equality_diagnostics(h, casorati::hyperplane_extrema(h));
    EXPECT_GT(d.eigen_pattern_residual, 0.1);
    EXPECT_LT(d.commutator_max, 1e-12);
    EXPECT_FALSE(d.quasi_umbilical());
}

TEST(Diagnostics, ZeroTensor) {
    const casorati::CasoratiInput h = casorati::CasoratiInput::from({Mat::Zero(4, 4)});
    const EqualityDiagnostics d = equality_diagnostics(h, casorati::hyperplane_extrema(h));
    EXPECT_EQ(d.offdiag_max, 0.0);
    EXPECT_EQ(d.eigen_pattern_residual, 0.0);
    EXPECT_EQ(d.commutator_max, 0.0);
    EXPECT_EQ(d.A_norm, 0.0);
}

TEST(Diagnostics, FrameWithLast) {
    std::mt19937_64 rng(36);
    const Vec u = qcas::test::random_unit(5, rng);
    const Mat F = frame_with_last(u);
    EXPECT_LT((F.transpose() * F - Mat::Identity(5, 5)).norm(), 1e-14);
    EXPECT_LT((F.col(4) - u).norm(), 1e-14);
}

TEST(SceneData, ValidationErrors) {
    PointwiseScene s = coordinate_scene(0.0, 4);
    s.first.vectors[0] = Vec::Unit(8, 5);
    EXPECT_THROW(validate(s), FrameError);

    PointwiseScene t = coordinate_scene(0.0, 4);
    t.T = {Mat::Zero(3, 3)};
    EXPECT_THROW(validate(t), DimensionError);

    PointwiseScene a = coordinate_scene(0.0, 4);
    a.A = {Mat::Identity(4, 4)};
    EXPECT_THROW(validate(a), StructureError);
}
