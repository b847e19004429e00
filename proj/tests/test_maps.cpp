#include "support.hpp"

#include "qcas/errors.hpp"
#include "qcas/maps/gauss.hpp"

#include <gtest/gtest.h>

using namespace qcas;
using namespace qcas::maps;
using qcas::test::span_of;

namespace {

std::shared_ptr<const geometry::MetricChart> chart(const std::string& name) {
    return std::make_shared<const geometry::MetricChart>(geometry::MetricChart::builtin(name));
}

SmoothMap projection() {
    return SmoothMap(chart("flat:8"), chart("flat:4"), {"x1", "x2", "x3", "x4"}, MapMode::RiemannianSubmersion, 4);
}

SmoothMap radial() {
    return SmoothMap(chart("flat:4"), chart("flat:1"), {"norm(x1, x2, x3, x4)"}, MapMode::RiemannianSubmersion, 1);
}

SmoothMap paraboloid() {
    auto source = std::make_shared<const geometry::MetricChart>(
        "paraboloid", geometry::default_coords(2), geometry::Box::unbounded(2),
        std::vector<std::vector<std::string>>{{"1 + x1^2", "x1*x2"}, {"x1*x2", "1 + x2^2"}});
    return SmoothMap(source, chart("flat:3"), {"x1", "x2", "(x1^2 + x2^2)/2"}, MapMode::RiemannianMap, 2);
}

SmoothMap hopf_cone() {
    auto target = std::make_shared<const geometry::MetricChart>(
        "hopf-cone", std::vector<std::string>{"r", "a", "b"},
        geometry::Box{{0.0, -std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()},
                      {std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity(),
                       std::numeric_limits<double>::infinity()}},
        std::vector<std::vector<std::string>>{
            {"1", "0", "0"}, {"0", "r^2/(1 + a^2 + b^2)^2", "0"}, {"0", "0", "r^2/(1 + a^2 + b^2)^2"}});
    return SmoothMap(chart("flat:4"), target,
                     {"norm(x1, x2, x3, x4)", "(x1*x3 + x2*x4)/(x3^2 + x4^2)", "(x2*x3 - x1*x4)/(x3^2 + x4^2)"},
                     MapMode::RiemannianSubmersion, 3);
}

Vec point(std::initializer_list<double> xs) {
    Vec v(static_cast<Eigen::Index>(xs.size()));
    int i = 0;
    for (double x : xs) v(i++) = x;
    return v;
}

}  // namespace

TEST(Differential, ProjectionSplit) {
    const SmoothMap F = projection();
    const Differential d = differential(F, span_of(point({0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8})));
    EXPECT_EQ(d.numerical_rank, 4);
    EXPECT_EQ(d.isometry_defect, 0.0);
    ASSERT_EQ(d.split.vertical.size(), 4);
    ASSERT_EQ(d.split.horizontal.size(), 4);
    for (const Vec& v : d.split.vertical.vectors) EXPECT_LT(v.head(4).norm(), 1e-14);
    for (const Vec& h : d.split.horizontal.vectors) EXPECT_LT(h.tail(4).norm(), 1e-14);
    EXPECT_EQ(d.split.range_perp.size(), 0);
    EXPECT_LT(check_split(d.split, d.jacobian, Mat::Identity(4, 4)).worst(), 1e-14);
}

TEST(Differential, RadialSplit) {
    const SmoothMap F = radial();
    const Vec x = point({0.1, -0.5, 0.7, 0.5});
    const Differential d = differential(F, span_of(x));
    ASSERT_EQ(d.split.horizontal.size(), 1);
    EXPECT_NEAR(std::abs(d.split.horizontal.vectors[0].dot(x.normalized())), 1.0, 1e-14);
    ASSERT_EQ(d.split.vertical.size(), 3);
    for (const Vec& v : d.split.vertical.vectors) EXPECT_LT(std::abs(v.dot(x)), 1e-14);
    EXPECT_LT(d.isometry_defect, 1e-14);
}

TEST(Differential, InclusionSplit) {
    const SmoothMap F(chart("flat:2"), chart("flat:4"), {"x1", "x2", "0", "0"}, MapMode::RiemannianMap, 2);
    const Differential d = differential(F, span_of(point({0.3, -0.4})));
    EXPECT_EQ(d.split.vertical.size(), 0);
    ASSERT_EQ(d.split.range.size(), 2);
    for (const Vec& r : d.split.range.vectors) EXPECT_LT(r.tail(2).norm(), 1e-14);
    EXPECT_EQ(d.split.range_perp.size(), 2);
}

TEST(Differential, RankAndIsometryErrors) {
    const SmoothMap wrong_rank(chart("flat:4"), chart("flat:2"), {"x1", "x1"}, MapMode::RiemannianMap, 2);
    EXPECT_THROW(differential(wrong_rank, span_of(point({0, 0, 0, 0}))), RankError);
    const SmoothMap stretched(chart("flat:2"), chart("flat:2"), {"2*x1", "x2"}, MapMode::RiemannianMap, 2);
    EXPECT_THROW(differential(stretched, span_of(point({0, 0}))), NotRiemannianMapError);
}

TEST(Differential, OutsideDomain) {
    const SmoothMap F(chart("half-plane"), chart("flat:2"), {"x", "y"}, MapMode::RiemannianMap, 2);
    EXPECT_THROW(evaluate_point(F, span_of(point({0, -1}))), DomainError);
}

TEST(SecondFundamentalForm, LinearIsometryVanishes) {
    const SmoothMap F(chart("flat:2"), chart("flat:4"), {"(x1 + x2)/sqrt(2)", "(x1 - x2)/sqrt(2)", "0", "0"},
                      MapMode::RiemannianMap, 2);
    const MapPoint p = evaluate_point(F, span_of(point({0.2, 0.7})));
    const Differential d = differential(F, p);
    EXPECT_EQ(FundamentalTensor::squared_norm(second_fundamental_form(p, d.split)), 0.0);
    EXPECT_EQ(gauss_residual_map(p, d.split), 0.0);
}

TEST(SecondFundamentalForm, ParaboloidVertex) {
    const SmoothMap F = paraboloid();
    const MapPoint p = evaluate_point(F, span_of(point({0, 0})));
    const Differential d = differential(F, p);
    const MatList B = second_fundamental_form(p, d.split);
    ASSERT_EQ(B.size(), 1u);
    // B = ±I in any orthonormal horizontal frame.
    const Mat expected = B[0](0, 0) > 0 ? Mat::Identity(2, 2) : Mat(-Mat::Identity(2, 2));
    EXPECT_LT((B[0] - expected).norm(), 1e-12);
    EXPECT_LT(gauss_residual_map(p, d.split), 1e-12);
}

TEST(SecondFundamentalForm, ParaboloidGaussAwayFromVertex) {
    const SmoothMap F = paraboloid();
    for (const Vec& x : {point({0.3, -0.2}), point({0.5, 0.4})}) {
        const MapPoint p = evaluate_point(F, span_of(x));
        const Differential d = differential(F, p);
        EXPECT_LT(gauss_residual_map(p, d.split), 1e-6);
        // Gaussian curvature of the graph: 1/(1 + |x|²)².
        const double K = 1.0 / std::pow(1.0 + x.squaredNorm(), 2);
        const Vec& h1 = d.split.horizontal.vectors[0];
        const Vec& h2 = d.split.horizontal.vectors[1];
        EXPECT_NEAR(p.R1(h1, h2, h2, h1), K, 1e-10);
    }
}

TEST(SecondFundamentalForm, CorruptedEntryBreaksGauss) {
    const SmoothMap F = paraboloid();
    const MapPoint p = evaluate_point(F, span_of(point({0, 0})));
    const Differential d = differential(F, p);
    MatList B = second_fundamental_form(p, d.split);
    B[0](0, 0) += 0.1;
    EXPECT_GE(gauss_residual_map(p, d.split, B), 0.005);
}

TEST(SecondFundamentalForm, ProjectionVanishes) {
    const SmoothMap F = projection();
    const MapPoint p = evaluate_point(F, span_of(point({1, -1, 0.5, 0, 2, 0.3, -0.7, 0.1})));
    const Differential d = differential(F, p);
    EXPECT_EQ(FundamentalTensor::squared_norm(second_fundamental_form(p, d.split)), 0.0);
}

TEST(ONeill, ProjectionVanishes) {
    const SmoothMap F = projection();
    const MapPoint p = evaluate_point(F, span_of(point({1, -1, 0.5, 0, 2, 0.3, -0.7, 0.1})));
    const Differential d = differential(F, p);
    EXPECT_EQ(FundamentalTensor::squared_norm(oneill_T(p, d.split)), 0.0);
    EXPECT_EQ(FundamentalTensor::squared_norm(oneill_A(p, d.split)), 0.0);
    const SubmersionResiduals r = gauss_residual_submersion(F, p, d.split, FiberModel::parse("flat", 8));
    EXPECT_EQ(r.worst(), 0.0);
}

TEST(ONeill, RadialUmbilicalT) {
    const SmoothMap F = radial();
    const Vec dir = point({0.1, -0.5, 0.7, 0.5}).normalized();
    for (double r : {0.5, 1.0, 2.0}) {
        const Vec x = r * dir;
        const MapPoint p = evaluate_point(F, span_of(x));
        const Differential d = differential(F, p);
        const MatList T = oneill_T(p, d.split);
        ASSERT_EQ(T.size(), 1u);
        EXPECT_LT((T[0].cwiseAbs() - Mat::Identity(3, 3) / r).norm(), 1e-10);
        EXPECT_LT((T[0] - T[0](0, 0) * Mat::Identity(3, 3)).norm(), 1e-10);
        EXPECT_NEAR(FundamentalTensor::squared_norm(T), 3.0 / (r * r), 1e-10);
        EXPECT_LT((oneill_T_via_map(p, d.split)[0] - T[0]).norm(), 1e-8);
        EXPECT_LT(FundamentalTensor::squared_norm(oneill_A(p, d.split)), 1e-20);
    }
}

TEST(ONeill, RadialGaussResiduals) {
    const SmoothMap F = radial();
    const Vec dir = point({0.1, -0.5, 0.7, 0.5}).normalized();
    for (const char* fiber : {"round-sphere", "derived"})
        for (double r : {0.5, 1.0, 2.0}) {
            const MapPoint p = evaluate_point(F, span_of(Vec(r * dir)));
            const Differential d = differential(F, p);
            const FiberModel model = FiberModel::parse(fiber, 4);
            const SubmersionResiduals res = gauss_residual_submersion(F, p, d.split, model);
            EXPECT_LT(res.worst(), 1e-6) << fiber << " r=" << r;
            // Round S³ of radius r: 2τ = 3·2/r².
            EXPECT_NEAR(fiber_scalar_curvature(model, p, d.split), 6.0 / (r * r), 1e-8);
        }
}

TEST(ONeill, HopfConeBracketAndA) {
    const SmoothMap F = hopf_cone();
    for (const Vec& x : {point({0.3, -0.5, 0.7, 0.4}), point({1, 0.5, -0.5, 1})}) {
        const MapPoint p = evaluate_point(F, span_of(x));
        const Differential d = differential(F, p);
        EXPECT_LT(d.isometry_defect, 1e-10);
        EXPECT_GT(FundamentalTensor::squared_norm(oneill_A(p, d.split)), 1e-4);
        EXPECT_LT(bracket_residual(p, d.split), 1e-6);
        EXPECT_GT(bracket_verticality(p, d.split), 1e-3);
        EXPECT_LT(gauss_residual_submersion(F, p, d.split, FiberModel::parse("derived", 4)).worst(), 1e-6);
    }
}

TEST(ONeill, SymmetryOfTAndSkewnessOfA) {
    const SmoothMap F = hopf_cone();
    const MapPoint p = evaluate_point(F, span_of(point({-0.2, 0.1, 0.3, -0.6})));
    const Differential d = differential(F, p);
    EXPECT_LT(FundamentalTensor::symmetry_defect(oneill_T(p, d.split), 1.0), 1e-10);
    EXPECT_LT(FundamentalTensor::symmetry_defect(oneill_A(p, d.split), -1.0), 1e-10);
}

TEST(Split, RotationPreservesInvariants) {
    std::mt19937_64 rng(12);
    const SmoothMap F = hopf_cone();
    const MapPoint p = evaluate_point(F, span_of(point({0.3, -0.5, 0.7, 0.4})));
    const Differential d = differential(F, p);
    const SceneSplit rotated = rotate_split(d.split, qcas::test::random_rotation(3, rng),
                                            qcas::test::random_rotation(1, rng), Mat::Identity(0, 0));
    EXPECT_LT(check_split(rotated, d.jacobian, p.g2()).worst(), 1e-12);
    EXPECT_NEAR(FundamentalTensor::squared_norm(oneill_A(p, rotated)),
                FundamentalTensor::squared_norm(oneill_A(p, d.split)), 1e-10);
}
