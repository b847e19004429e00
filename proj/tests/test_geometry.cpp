#include "support.hpp"

#include "qcas/errors.hpp"
#include "qcas/geometry/chart.hpp"
#include "qcas/geometry/curvature.hpp"
#include "qcas/quaternionic/qsf.hpp"

#include <gtest/gtest.h>

#include <numbers>

using namespace qcas;
using namespace qcas::geometry;
using qcas::test::span_of;

namespace {

ScalarField field(const std::string& text, int n) {
    return {Expression::parse(text, default_coords(n)), Box::unbounded(static_cast<std::size_t>(n))};
}

Vec point(std::initializer_list<double> xs) {
    Vec v(static_cast<Eigen::Index>(xs.size()));
    int i = 0;
    for (double x : xs) v(i++) = x;
    return v;
}

Vec sample_in(const MetricChart& chart, std::mt19937_64& rng) {
    const Box& box = chart.domain();
    Vec x(chart.dim());
    for (int i = 0; i < chart.dim(); ++i) {
        const double lo = std::isfinite(box.lower[i]) ? box.lower[i] : -2.0;
        const double hi = std::isfinite(box.upper[i]) ? box.upper[i] : lo + 4.0;
        std::uniform_real_distribution<double> u(lo + 0.05 * (hi - lo), hi - 0.05 * (hi - lo));
        x(i) = u(rng);
    }
    return x;
}

double sectional(const CurvaturePoint& cp, const Vec& a, const Vec& b) {
    const OrthoFrame f = gram_schmidt({a, b}, cp.g);
    return cp(f.vectors[0], f.vectors[1], f.vectors[1], f.vectors[0]);
}

}  // namespace

TEST(Jet, PolynomialDerivatives) {
    const Jet2 j = eval_jet2(field("x1^2*x2", 2), span_of(point({2, 3})));
    EXPECT_DOUBLE_EQ(j.value, 12.0);
    EXPECT_DOUBLE_EQ(j.grad(0), 12.0);
    EXPECT_DOUBLE_EQ(j.grad(1), 4.0);
    EXPECT_DOUBLE_EQ(j.hess(0, 0), 6.0);
    EXPECT_DOUBLE_EQ(j.hess(0, 1), 4.0);
    EXPECT_DOUBLE_EQ(j.hess(1, 0), 4.0);
    EXPECT_DOUBLE_EQ(j.hess(1, 1), 0.0);
}

TEST(Jet, ConstantHasNoDerivatives) {
    const Jet2 j = eval_jet2(field("5", 3), span_of(point({0.3, -1, 7})));
    EXPECT_EQ(j.value, 5.0);
    EXPECT_EQ(j.grad.norm(), 0.0);
    EXPECT_EQ(j.hess.norm(), 0.0);
}

TEST(Jet, RationalFunction) {
    // d/dx (1+x²)⁻¹ = −2x(1+x²)⁻², d²/dx² = (6x² − 2)(1+x²)⁻³.
    const Jet2 j = eval_jet2(field("1/(1 + x1^2)", 1), span_of(point({1})));
    EXPECT_NEAR(j.value, 0.5, 1e-15);
    EXPECT_NEAR(j.grad(0), -0.5, 1e-15);
    EXPECT_NEAR(j.hess(0, 0), 0.5, 1e-15);
}

TEST(Jet, OutsideDomainThrows) {
    ScalarField f = field("x1", 1);
    f.domain = Box{{0.0}, {1.0}};
    EXPECT_THROW(eval_jet2(f, span_of(point({1.5}))), DomainError);
    EXPECT_THROW(eval_jet2(f, span_of(point({1.0}))), DomainError);
}

TEST(Jet, MatchesCentralDifferencesOnBuiltinMetrics) {
    std::mt19937_64 rng(3);
    const double h = 1e-4;
    for (const char* name : {"flat:3", "sphere:1", "sphere:2", "half-plane", "polar"}) {
        const MetricChart chart = MetricChart::builtin(name);
        const int n = chart.dim();
        for (int trial = 0; trial < 10; ++trial) {
            const Vec x = sample_in(chart, rng);
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    const Expression& e = chart.component(a, b);
                    const Jet2 j = e.eval_jet(span_of(x));
                    for (int m = 0; m < n; ++m) {
                        Vec xp = x, xm = x;
                        xp(m) += h;
                        xm(m) -= h;
                        const double fd = (e.eval(span_of(xp)) - e.eval(span_of(xm))) / (2 * h);
                        EXPECT_NEAR(j.grad(m), fd, 1e-5) << name;
                        for (int p = 0; p < n; ++p) {
                            Vec xpp = x, xpm = x, xmp = x, xmm = x;
                            xpp(m) += h, xpp(p) += h;
                            xpm(m) += h, xpm(p) -= h;
                            xmp(m) -= h, xmp(p) += h;
                            xmm(m) -= h, xmm(p) -= h;
                            const double fd2 = (e.eval(span_of(xpp)) - e.eval(span_of(xpm)) - e.eval(span_of(xmp)) +
                                                e.eval(span_of(xmm))) /
                                               (4 * h * h);
                            EXPECT_NEAR(j.hess(m, p), fd2, 1e-5) << name;
                        }
                    }
                }
        }
    }
}

TEST(Expression, ParseErrorCarriesColumn) {
    try {
        Expression::parse("x1 + * 2", default_coords(1));
        FAIL() << "expected a parse error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 1u);
        EXPECT_GE(e.column(), 4u);
    }
    EXPECT_THROW(Expression::parse("y + 1", default_coords(1)), ParseError);
}

TEST(Christoffel, FlatVanishes) {
    const Tensor3 G = christoffel(MetricChart::builtin("flat:4"), span_of(point({0.1, 2, -3, 4})));
    for (int k = 0; k < 4; ++k)
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) EXPECT_EQ(G(k, i, j), 0.0);
}

TEST(Christoffel, Polar) {
    const Tensor3 G = christoffel(MetricChart::builtin("polar"), span_of(point({2, 0.3})));
    EXPECT_NEAR(G(0, 1, 1), -2.0, 1e-14);
    EXPECT_NEAR(G(1, 0, 1), 0.5, 1e-14);
    EXPECT_NEAR(G(1, 1, 0), 0.5, 1e-14);
}

TEST(Christoffel, Conformal) {
    const MetricChart chart("conformal", default_coords(2), Box::unbounded(2),
                            {{"exp(2*x1)", "0"}, {"0", "exp(2*x1)"}});
    const Tensor3 G = christoffel(chart, span_of(point({0, 0.7})));
    EXPECT_NEAR(G(0, 0, 0), 1.0, 1e-14);
    EXPECT_NEAR(G(0, 1, 1), -1.0, 1e-14);
    EXPECT_NEAR(G(1, 0, 1), 1.0, 1e-14);
}

TEST(Christoffel, SingularMetricThrows) {
    const MetricChart chart("degenerate", default_coords(2), Box::unbounded(2), {{"1", "1"}, {"1", "1"}});
    EXPECT_THROW(christoffel(chart, span_of(point({0, 0}))), DegeneracyError);
}

TEST(Christoffel, MetricCompatibilityOnBuiltinCharts) {
    std::mt19937_64 rng(5);
    for (const char* name : {"flat:4", "sphere:1", "sphere:3", "half-plane", "polar"}) {
        const MetricChart chart = MetricChart::builtin(name);
        for (int trial = 0; trial < 100; ++trial) {
            const Vec x = sample_in(chart, rng);
            const MetricJets jets = chart.metric_jets(span_of(x));
            EXPECT_LT(metric_compatibility_residual(jets, christoffel(chart, span_of(x))), 1e-9) << name;
        }
    }
}

TEST(Riemann, FlatVanishes) {
    const CurvaturePoint cp = riemann(MetricChart::builtin("flat:3"), span_of(point({1, 2, 3})));
    EXPECT_EQ(cp.riemann.max_abs(), 0.0);
}

TEST(Riemann, SphereSectionalCurvature) {
    std::mt19937_64 rng(7);
    for (double r : {0.5, 1.0, 3.0}) {
        const MetricChart chart = MetricChart::builtin("sphere:" + std::to_string(r));
        for (int trial = 0; trial < 5; ++trial) {
            const CurvaturePoint cp = riemann(chart, span_of(sample_in(chart, rng)));
            EXPECT_NEAR(sectional(cp, Vec::Unit(2, 0), Vec::Unit(2, 1)), 1.0 / (r * r), 1e-10);
        }
    }
}

TEST(Riemann, HyperbolicPlane) {
    std::mt19937_64 rng(8);
    const MetricChart chart = MetricChart::builtin("half-plane");
    for (int trial = 0; trial < 5; ++trial) {
        const CurvaturePoint cp = riemann(chart, span_of(sample_in(chart, rng)));
        EXPECT_NEAR(sectional(cp, Vec::Unit(2, 0), Vec::Unit(2, 1)), -1.0, 1e-10);
    }
}

TEST(Riemann, SymmetriesAndBianchiOnCurvedChart) {
    // A generic non-diagonal 3-dimensional metric.
    const MetricChart chart("generic", default_coords(3), Box::unbounded(3),
                            {{"2 + sin(x1)*x2", "0.3*x3", "0.1*x1*x2"},
                             {"0.3*x3", "1 + x1^2", "0.2*cos(x2)"},
                             {"0.1*x1*x2", "0.2*cos(x2)", "3 + exp(0.1*x3)"}});
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        const CurvaturePoint cp = riemann(chart, span_of(qcas::test::random_vector(3, rng, -0.5, 0.5)));
        EXPECT_LT(symmetry_residuals(cp.riemann).worst(), 1e-9);
        EXPECT_GT(cp.riemann.max_abs(), 1e-3);
    }
}

TEST(GramSchmidt, Examples) {
    const Mat I2 = Mat::Identity(2, 2);
    const OrthoFrame a = gram_schmidt({Vec::Unit(2, 0), Vec::Unit(2, 1)}, I2);
    EXPECT_EQ(a.vectors[0], Vec::Unit(2, 0));
    EXPECT_EQ(a.vectors[1], Vec::Unit(2, 1));

    const OrthoFrame b = gram_schmidt({point({1, 0}), point({1, 1})}, I2);
    EXPECT_NEAR((b.vectors[1] - Vec::Unit(2, 1)).norm(), 0.0, 1e-15);

    Mat g(2, 2);
    g << 4, 0, 0, 1;
    const OrthoFrame c = gram_schmidt({point({1, 0})}, g);
    EXPECT_NEAR(c.vectors[0](0), 0.5, 1e-15);
    EXPECT_LT(c.orthonormality_defect(), 1e-15);
}

TEST(GramSchmidt, DependentInputThrows) {
    EXPECT_THROW(gram_schmidt({point({1, 2}), point({2, 4})}, Mat::Identity(2, 2)), DependencyError);
}

TEST(GramSchmidt, ComplementCompletesFrame) {
    Mat g(3, 3);
    g << 2, 0.5, 0, 0.5, 1, 0.1, 0, 0.1, 3;
    const OrthoFrame f = gram_schmidt({point({1, 1, 0})}, g);
    const OrthoFrame rest = orthogonal_complement(f);
    OrthoFrame all = f;
    all.vectors.insert(all.vectors.end(), rest.vectors.begin(), rest.vectors.end());
    EXPECT_EQ(all.size(), 3);
    EXPECT_LT(all.orthonormality_defect(), 1e-12);
}

TEST(ScalarCurvature, Examples) {
    const CurvaturePoint flat = riemann(MetricChart::builtin("flat:4"), span_of(point({0, 0, 0, 0})));
    const Mat I4 = Mat::Identity(4, 4);
    EXPECT_EQ(scalar_curvature_of_frame(as_form(flat), qcas::test::columns(I4, 0, 4, I4)), 0.0);

    const MetricChart sphere = MetricChart::builtin("sphere:1");
    const CurvaturePoint cp = riemann(sphere, span_of(point({1.0, 0.4})));
    const OrthoFrame full = gram_schmidt({Vec::Unit(2, 0), Vec::Unit(2, 1)}, cp.g);
    EXPECT_NEAR(scalar_curvature_of_frame(as_form(cp), full), 2.0, 1e-10);

    // Frame tangent to S³ ⊂ ℝ⁴ under the flat ambient curvature.
    const Vec p = point({0.5, 0.5, 0.5, 0.5});
    const OrthoFrame tangent = orthogonal_complement({p}, I4);
    EXPECT_EQ(tangent.size(), 3);
    EXPECT_EQ(scalar_curvature_of_frame(as_form(flat), tangent), 0.0);
}

TEST(ScalarCurvature, DegenerateFrames) {
    const CurvaturePoint cp = riemann(MetricChart::builtin("sphere:1"), span_of(point({1.0, 0.4})));
    const OrthoFrame one = gram_schmidt({Vec::Unit(2, 0)}, cp.g);
    EXPECT_EQ(scalar_curvature_of_frame(as_form(cp), one), 0.0);
    EXPECT_THROW(normalized_scalar(0.0, 1), DimensionError);
}

TEST(ScalarCurvature, RotationInvariant) {
    std::mt19937_64 rng(10);
    const auto s = quaternionic::QuaternionicStructure::quat_flat(2);
    const Mat I8 = Mat::Identity(8, 8);
    const quaternionic::QSFOracle oracle(4.0, s, I8);
    const Mat Q = qcas::test::random_rotation(8, rng);
    const OrthoFrame f = qcas::test::columns(Q, 0, 5, I8);
    const Mat R = qcas::test::random_rotation(5, rng);
    OrthoFrame rotated = f;
    rotated.vectors.clear();
    const Mat F = f.matrix() * R;
    for (int j = 0; j < 5; ++j) rotated.vectors.push_back(F.col(j));
    const double a = scalar_curvature_of_frame(oracle.form(), f);
    const double b = scalar_curvature_of_frame(oracle.form(), rotated);
    EXPECT_NEAR(a, b, 1e-9 * std::max(1.0, std::abs(a)));
}

TEST(MixedScalar, MatchesClosedForm) {
    std::mt19937_64 rng(11);
    const auto s = quaternionic::QuaternionicStructure::quat_flat(2);
    const Mat I8 = Mat::Identity(8, 8);
    const double c = 4.0;
    const quaternionic::QSFOracle oracle(c, s, I8);
    for (int trial = 0; trial < 10; ++trial) {
        const Mat Q = qcas::test::random_rotation(8, rng);
        const int sdim = 3 + trial % 3;
        const OrthoFrame hor = qcas::test::columns(Q, 0, sdim, I8);
        const OrthoFrame ver = qcas::test::columns(Q, sdim, 8 - sdim, I8);
        double pv = 0.0;
        for (int a = 0; a < 3; ++a)
            for (const Vec& h : hor.vectors)
                for (const Vec& v : ver.vectors) pv += std::pow(h.dot(s.J(a) * v), 2);
        const double closed = c / 4.0 * sdim * (8 - sdim) + 3.0 * c / 4.0 * pv;
        EXPECT_NEAR(mixed_scalar(oracle.form(), hor, ver), closed, 1e-10);
    }
}

TEST(MixedScalar, EmptyFrames) {
    const auto s = quaternionic::QuaternionicStructure::quat_flat(1);
    const Mat I4 = Mat::Identity(4, 4);
    const quaternionic::QSFOracle oracle(4.0, s, I4);
    EXPECT_EQ(mixed_scalar(oracle.form(), qcas::test::columns(I4, 0, 4, I4), qcas::test::columns(I4, 4, 0, I4)), 0.0);
}

TEST(MetricChart, NonSymmetricMetricIsRejected) {
    const MetricChart chart("skewed", default_coords(2), Box::unbounded(2), {{"1", "x1"}, {"0", "1"}});
    EXPECT_NO_THROW(chart.metric(span_of(point({0, 0}))));
    EXPECT_THROW(chart.metric(span_of(point({0.5, 0}))), MetricError);
}
