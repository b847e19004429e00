#include "qcas/maps/smooth_map.hpp"

#include "qcas/errors.hpp"

namespace qcas::maps {

const char* to_string(MapMode mode) {
    return mode == MapMode::RiemannianMap ? "riemannian_map" : "riemannian_submersion";
}

SmoothMap::SmoothMap(std::shared_ptr<const geometry::MetricChart> source,
                     std::shared_ptr<const geometry::MetricChart> target,
                     const std::vector<std::string>& components, MapMode mode, int rank)
    : source_(std::move(source)), target_(std::move(target)), mode_(mode), rank_(rank) {
    if (static_cast<int>(components.size()) != target_->dim())
        throw DimensionError("map needs one component per target coordinate (" + std::to_string(target_->dim()) + ")");
    for (const auto& c : components) components_.push_back(geometry::Expression::parse(c, source_->coords()));
    if (rank_ < 1 || rank_ > std::min(source_->dim(), target_->dim()))
        throw DimensionError("declared rank " + std::to_string(rank_) + " is impossible for these charts");
    if (mode_ == MapMode::RiemannianSubmersion && rank_ != target_->dim())
        throw DimensionError("a submersion must have rank equal to the target dimension");
}

Vec SmoothMap::value(std::span<const double> x) const {
    Vec out(target_->dim());
    for (int a = 0; a < target_->dim(); ++a) out(a) = components_[static_cast<std::size_t>(a)].eval(x);
    return out;
}

MapJets SmoothMap::jets(std::span<const double> x) const {
    const int n1 = source_->dim();
    const int n2 = target_->dim();
    MapJets out;
    out.value = Vec(n2);
    out.jacobian = Mat(n2, n1);
    out.hessians.reserve(static_cast<std::size_t>(n2));
    for (int a = 0; a < n2; ++a) {
        const geometry::Jet2 j = components_[static_cast<std::size_t>(a)].eval_jet(x);
        out.value(a) = j.value;
        out.jacobian.row(a) = j.grad.transpose();
        out.hessians.push_back(j.hess);
    }
    return out;
}

MapPoint evaluate_point(const SmoothMap& map, std::span<const double> x) {
    MapPoint p;
    p.x = Eigen::Map<const Vec>(x.data(), static_cast<Eigen::Index>(x.size()));
    p.source_metric = map.source().metric_jets(x);
    p.F = map.jets(x);
    p.source = geometry::connection_from_jets(p.source_metric);
    p.source_riemann = geometry::riemann_from_connection(p.source);

    const Vec& fx = p.F.value;
    const std::span<const double> fspan(fx.data(), static_cast<std::size_t>(fx.size()));
    p.target_metric = map.target().metric_jets(fspan);
    p.target = geometry::connection_from_jets(p.target_metric);
    p.target_riemann = geometry::riemann_from_connection(p.target);
    return p;
}

}  // namespace qcas::maps
