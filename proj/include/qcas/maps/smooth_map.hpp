#pragma once

#include "qcas/geometry/chart.hpp"
#include "qcas/geometry/curvature.hpp"

#include <memory>
#include <span>
#include <string>
#include <vector>

namespace qcas::maps {

enum class MapMode { RiemannianMap, RiemannianSubmersion };

const char* to_string(MapMode mode);

/// Map value, Jacobian (n₂×n₁) and per-component Hessians at a source point.
struct MapJets {
    Vec value;
    Mat jacobian;
    MatList hessians;  ///< hessians[a](i,j) = ∂_i∂_j F^a
};

/// A smooth map between two charts given by closed-form components.
class SmoothMap {
public:
    /// `components` are expressions in the source coordinates, one per target
    /// coordinate. `rank` is the declared rank s of the differential.
    SmoothMap(std::shared_ptr<const geometry::MetricChart> source,
              std::shared_ptr<const geometry::MetricChart> target,
              const std::vector<std::string>& components, MapMode mode, int rank);

    const geometry::MetricChart& source() const { return *source_; }
    const geometry::MetricChart& target() const { return *target_; }
    MapMode mode() const { return mode_; }
    int rank() const { return rank_; }
    const std::vector<geometry::Expression>& components() const { return components_; }

    Vec value(std::span<const double> x) const;
    MapJets jets(std::span<const double> x) const;

private:
    std::shared_ptr<const geometry::MetricChart> source_;
    std::shared_ptr<const geometry::MetricChart> target_;
    std::vector<geometry::Expression> components_;
    MapMode mode_;
    int rank_;
};

/// Everything the pointwise tensor machinery needs at one source point:
/// map jets plus connection and curvature of both charts.
struct MapPoint {
    Vec x;
    MapJets F;
    geometry::MetricJets source_metric;
    geometry::Connection source;
    geometry::Tensor4 source_riemann;
    geometry::MetricJets target_metric;
    geometry::Connection target;
    geometry::Tensor4 target_riemann;

    const Mat& g1() const { return source.g; }
    const Mat& g2() const { return target.g; }
    double R1(const Vec& a, const Vec& b, const Vec& c, const Vec& d) const { return source_riemann.contract(a, b, c, d); }
    double R2(const Vec& a, const Vec& b, const Vec& c, const Vec& d) const { return target_riemann.contract(a, b, c, d); }
};

/// Throws DomainError when x or F(x) leaves its chart.
MapPoint evaluate_point(const SmoothMap& map, std::span<const double> x);

}  // namespace qcas::maps
