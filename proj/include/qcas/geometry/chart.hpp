#pragma once

#include "qcas/geometry/expression.hpp"

#include <span>
#include <string>
#include <vector>

namespace qcas::geometry {

/// Metric components and their first and second coordinate partials at a point.
struct MetricJets {
    Mat g;
    std::vector<Mat> dg;                 ///< dg[m](a,b) = ∂_m g_ab
    std::vector<std::vector<Mat>> d2g;   ///< d2g[m][p](a,b) = ∂_m ∂_p g_ab
};

/// A single coordinate chart carrying a closed-form metric.
class MetricChart {
public:
    /// `metric` holds n×n component expressions over `coords`, row-major.
    MetricChart(std::string name, std::vector<std::string> coords, Box domain,
                std::vector<std::vector<std::string>> metric);

    /// Builtin registry: "flat:n", "sphere:r", "half-plane", "polar".
    static MetricChart builtin(const std::string& name);

    const std::string& name() const { return name_; }
    int dim() const { return static_cast<int>(coords_.size()); }
    const std::vector<std::string>& coords() const { return coords_; }
    const Box& domain() const { return domain_; }
    const Expression& component(int a, int b) const { return metric_[static_cast<std::size_t>(a * dim() + b)]; }

    /// Metric matrix at x. Throws DomainError outside the box and MetricError if
    /// the components are not symmetric to 1e-14 or not positive definite.
    Mat metric(std::span<const double> x) const;
    MetricJets metric_jets(std::span<const double> x) const;

    /// Symmetry / definiteness check only; used by `validate`.
    void check_metric(std::span<const double> x, const Mat& g) const;

private:
    void require_inside(std::span<const double> x) const;

    std::string name_;
    std::vector<std::string> coords_;
    Box domain_;
    std::vector<Expression> metric_;
};

/// Coordinate names x1..xn.
std::vector<std::string> default_coords(int n);

}  // namespace qcas::geometry
