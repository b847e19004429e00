#include "qcas/geometry/chart.hpp"

#include "qcas/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace qcas::geometry {

namespace {

constexpr double kSymmetryTol = 1e-14;
constexpr double kDefinitenessTol = 1e-10;

std::string format_point(std::span<const double> x) {
    std::ostringstream os;
    os.precision(17);
    os << '(';
    for (std::size_t i = 0; i < x.size(); ++i) os << (i ? ", " : "") << x[i];
    os << ')';
    return os.str();
}

double parse_number(const std::string& text, const std::string& what) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw ConfigurationError("malformed " + what + " in builtin name: '" + text + "'");
    return v;
}

std::vector<std::vector<std::string>> diagonal(const std::vector<std::string>& entries) {
    const std::size_t n = entries.size();
    std::vector<std::vector<std::string>> m(n, std::vector<std::string>(n, "0"));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = entries[i];
    return m;
}

}  // namespace

std::vector<std::string> default_coords(int n) {
    std::vector<std::string> c;
    for (int i = 1; i <= n; ++i) c.push_back("x" + std::to_string(i));
    return c;
}

MetricChart::MetricChart(std::string name, std::vector<std::string> coords, Box domain,
                         std::vector<std::vector<std::string>> metric)
    : name_(std::move(name)), coords_(std::move(coords)), domain_(std::move(domain)) {
    const std::size_t n = coords_.size();
    if (n == 0) throw DimensionError("chart '" + name_ + "' has no coordinates");
    if (domain_.dim() != n) throw DimensionError("chart '" + name_ + "': domain dimension mismatch");
    if (metric.size() != n) throw DimensionError("chart '" + name_ + "': metric must be n×n");
    metric_.reserve(n * n);
    for (const auto& row : metric) {
        if (row.size() != n) throw DimensionError("chart '" + name_ + "': metric must be n×n");
        for (const auto& entry : row) metric_.push_back(Expression::parse(entry, coords_));
    }
}

MetricChart MetricChart::builtin(const std::string& name) {
    const auto colon = name.find(':');
    const std::string head = name.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : name.substr(colon + 1);

    if (head == "flat") {
        const double nd = parse_number(arg, "dimension");
        const int n = static_cast<int>(nd);
        if (n < 1 || nd != n) throw ConfigurationError("flat chart needs a positive integer dimension");
        return MetricChart(name, default_coords(n), Box::unbounded(static_cast<std::size_t>(n)),
                           diagonal(std::vector<std::string>(static_cast<std::size_t>(n), "1")));
    }
    if (head == "sphere") {
        const double r = parse_number(arg, "radius");
        if (!(r > 0)) throw ConfigurationError("sphere radius must be positive");
        std::ostringstream r2;
        r2.precision(17);
        r2 << r * r;
        Box box{{0.0, -std::numbers::pi}, {std::numbers::pi, std::numbers::pi}};
        return MetricChart(name, {"theta", "phi"}, box,
                           diagonal({r2.str(), r2.str() + "*sin(theta)^2"}));
    }
    if (head == "half-plane" && arg.empty()) {
        Box box{{-std::numeric_limits<double>::infinity(), 0.0},
                {std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()}};
        return MetricChart(name, {"x", "y"}, box, diagonal({"1/y^2", "1/y^2"}));
    }
    if (head == "polar" && arg.empty()) {
        Box box{{0.0, -std::numeric_limits<double>::infinity()},
                {std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()}};
        return MetricChart(name, {"r", "theta"}, box, diagonal({"1", "r^2"}));
    }
    throw ConfigurationError("unknown builtin chart '" + name + "'");
}

void MetricChart::require_inside(std::span<const double> x) const {
    if (x.size() != coords_.size())
        throw DimensionError("chart '" + name_ + "' expects " + std::to_string(coords_.size()) + " coordinates");
    if (!domain_.contains(x))
        throw DomainError("point " + format_point(x) + " is outside the domain of chart '" + name_ + "'");
}

void MetricChart::check_metric(std::span<const double> x, const Mat& g) const {
    const int n = dim();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            const double scale = std::max({1.0, std::abs(g(a, b)), std::abs(g(b, a))});
            if (std::abs(g(a, b) - g(b, a)) > kSymmetryTol * scale)
                throw MetricError("metric of chart '" + name_ + "' is not symmetric at " + format_point(x) +
                                  " (components " + std::to_string(a + 1) + "," + std::to_string(b + 1) + ")");
        }
    Eigen::SelfAdjointEigenSolver<Mat> eig(0.5 * (g + g.transpose()), Eigen::EigenvaluesOnly);
    const double smallest = eig.eigenvalues().minCoeff();
    if (std::abs(smallest) <= kDefinitenessTol)
        throw DegeneracyError("metric of chart '" + name_ + "' is singular at " + format_point(x));
    if (!(smallest > kDefinitenessTol))
        throw MetricError("metric of chart '" + name_ + "' is not positive definite at " + format_point(x));
}

Mat MetricChart::metric(std::span<const double> x) const {
    require_inside(x);
    const int n = dim();
    Mat g(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) g(a, b) = component(a, b).eval(x);
    check_metric(x, g);
    return g;
}

MetricJets MetricChart::metric_jets(std::span<const double> x) const {
    require_inside(x);
    const int n = dim();
    MetricJets out;
    out.g = Mat::Zero(n, n);
    out.dg.assign(static_cast<std::size_t>(n), Mat::Zero(n, n));
    out.d2g.assign(static_cast<std::size_t>(n), std::vector<Mat>(static_cast<std::size_t>(n), Mat::Zero(n, n)));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const Jet2 j = component(a, b).eval_jet(x);
            out.g(a, b) = j.value;
            for (int m = 0; m < n; ++m) {
                out.dg[static_cast<std::size_t>(m)](a, b) = j.grad(m);
                for (int p = 0; p < n; ++p) out.d2g[static_cast<std::size_t>(m)][static_cast<std::size_t>(p)](a, b) = j.hess(m, p);
            }
        }
    check_metric(x, out.g);
    return out;
}

}  // namespace qcas::geometry
