#include "qcas/scenario/runner.hpp"

#include "qcas/errors.hpp"
#include "qcas/maps/gauss.hpp"
#include "qcas/maps/split.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

namespace qcas::scenario {

using inequalities::TheoremId;
using inequalities::TheoremReport;

namespace {

using Checks = std::vector<std::pair<std::string, double>>;

void require_below(const char* what, double value, double tol) {
    if (!(value <= tol))
        throw OracleError(std::string(what) + " " + std::to_string(value) + " exceeds tolerance " + std::to_string(tol));
}

bool wants(const Scenario& sc, TheoremId id) {
    return std::find(sc.theorems.begin(), sc.theorems.end(), id) != sc.theorems.end();
}

bool wants_submersion_theorem(const Scenario& sc) {
    return wants(sc, TheoremId::Vertical52) || wants(sc, TheoremId::Horizontal62) || wants(sc, TheoremId::Combined72);
}

std::optional<double> deltaN_value(const Scenario& sc) {
    if (!sc.deltaN) return std::nullopt;
    return sc.deltaN->value;
}

void append(std::vector<TheoremReport>& out, std::vector<TheoremReport> more) {
    for (auto& r : more) out.push_back(std::move(r));
}

void check_submersion(const Scenario& sc, const inequalities::SubmersionPointData& d,
                      const inequalities::CheckOptions& opts, std::vector<TheoremReport>& out) {
    if (wants(sc, TheoremId::Vertical52)) append(out, inequalities::check_vertical_theorem(d, opts));
    if (wants(sc, TheoremId::Horizontal62)) append(out, inequalities::check_horizontal_theorem(d, opts));
    if (wants(sc, TheoremId::Combined72)) append(out, inequalities::check_combined_theorem(d, deltaN_value(sc), opts));
}

void evaluate_chart(const Scenario& sc, const RunOptions& options, PointResult& res) {
    const ChartScene& ch = sc.chart;
    const maps::SmoothMap& map = *ch.map;
    const Tolerances& tol = sc.tolerances;
    const Vec& x = res.x;
    const maps::MapPoint point = maps::evaluate_point(map, std::span<const double>(x.data(), static_cast<std::size_t>(x.size())));
    const maps::Differential diff = maps::differential(map, point, {tol.kernel, tol.isometry});
    const maps::SceneSplit& split = diff.split;
    res.checks.emplace_back("isometry_defect", diff.isometry_defect);

    const bool map_theorem = wants(sc, TheoremId::Map32);
    const bool submersion = map.mode() == maps::MapMode::RiemannianSubmersion;
    std::optional<inequalities::MapPointData> map_data;
    std::optional<inequalities::SubmersionPointData> sub_data;

    if (!submersion || map_theorem) {
        const MatList B = maps::second_fundamental_form(point, split);
        const double gauss = maps::gauss_residual_map(point, split, B);
        res.checks.emplace_back("gauss_map", gauss);
        require_below("Gauss residual", gauss, tol.gauss);
        const quaternionic::QuaternionicStructure* structure = ch.target_structure ? &*ch.target_structure : nullptr;
        map_data = inequalities::map_data(point, split, structure, sc.c, tol.space_form);
        res.checks.emplace_back("target_space_form_mismatch", map_data->space_form_mismatch);
    }
    if (submersion) {
        const maps::SubmersionResiduals r = maps::gauss_residual_submersion(map, point, split, ch.fiber);
        res.checks.emplace_back("gauss_vertical", r.vertical);
        res.checks.emplace_back("gauss_horizontal", r.horizontal);
        res.checks.emplace_back("gauss_mixed", r.mixed);
        const double bracket = maps::bracket_residual(point, split);
        res.checks.emplace_back("bracket_residual", bracket);
        require_below("Gauss residual", r.worst(), tol.gauss);
        require_below("bracket residual", bracket, tol.gauss);
        if (wants_submersion_theorem(sc) || !options.theorems) {
            const quaternionic::QuaternionicStructure* structure = ch.source_structure ? &*ch.source_structure : nullptr;
            sub_data = inequalities::submersion_data(point, split, ch.fiber, structure, sc.c, tol.space_form);
            res.checks.emplace_back("source_space_form_mismatch", sub_data->space_form_mismatch);
        }
    }
    if (!options.theorems) return;
    inequalities::CheckOptions opts = options.check;
    opts.tolerance = tol.equality;
    if (map_theorem) append(res.reports, inequalities::check_map_theorem(*map_data, opts));
    if (sub_data) check_submersion(sc, *sub_data, opts, res.reports);
}

void evaluate_pointwise(const Scenario& sc, const RunOptions& options, PointResult& res) {
    const inequalities::PointwiseScene& scene = sc.pointwise[static_cast<std::size_t>(res.index)];
    inequalities::validate(scene);
    const Mat g = scene.metric.size() > 0 ? scene.metric : Mat::Identity(scene.structure.dim(), scene.structure.dim());
    res.checks.emplace_back("structure_defect", quaternionic::check_quaternionic_structure(scene.structure, g).worst());
    geometry::OrthoFrame all{scene.first.vectors, g};
    all.vectors.insert(all.vectors.end(), scene.second.vectors.begin(), scene.second.vectors.end());
    res.checks.emplace_back("frame_defect", all.orthonormality_defect());
    if (!options.theorems) return;
    inequalities::CheckOptions opts = options.check;
    opts.tolerance = sc.tolerances.equality;
    if (wants(sc, TheoremId::Map32)) append(res.reports, inequalities::check_map_theorem(inequalities::map_data(scene), opts));
    if (wants_submersion_theorem(sc)) check_submersion(sc, inequalities::submersion_data(scene), opts, res.reports);
}

PointResult evaluate(const Scenario& sc, const RunOptions& options, int index) {
    PointResult res;
    res.index = index;
    if (sc.mode == SceneMode::Chart) res.x = sc.chart.points[static_cast<std::size_t>(index)];
    try {
        if (sc.mode == SceneMode::Chart) evaluate_chart(sc, options, res);
        else evaluate_pointwise(sc, options, res);
    } catch (const Error& e) {
        res.valid = false;
        res.error_kind = e.kind();
        res.error_message = e.what();
        res.reports.clear();
    }
    return res;
}

std::vector<PointResult> evaluate_all(const Scenario& sc, const RunOptions& options) {
    const int count = sc.point_count();
    std::vector<PointResult> results(static_cast<std::size_t>(count));
    unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max(count, 1)));
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int i = next++; i < count; i = next++) results[static_cast<std::size_t>(i)] = evaluate(sc, options, i);
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    return results;
}

RunReport assemble(const Scenario& sc, std::vector<PointResult> points) {
    RunReport rep;
    rep.scene = sc.name;
    rep.mode = sc.mode;
    rep.c = sc.c;
    rep.deltaN = sc.deltaN;
    rep.tolerances = sc.tolerances;
    rep.theorems = sc.theorems;
    rep.points = std::move(points);

    std::map<std::pair<int, int>, TheoremSummary> by_key;
    std::vector<std::string> check_order;
    std::map<std::string, double> check_max;
    for (const PointResult& p : rep.points) {
        if (!p.valid) ++rep.invalid_points;
        for (const auto& [name, value] : p.checks) {
            if (!check_max.count(name)) {
                check_order.push_back(name);
                check_max[name] = value;
            } else {
                check_max[name] = std::max(check_max[name], value);
            }
        }
        for (const TheoremReport& r : p.reports) {
            const std::pair<int, int> key{static_cast<int>(r.theorem), static_cast<int>(r.variant)};
            auto [it, fresh] = by_key.try_emplace(key);
            TheoremSummary& s = it->second;
            if (fresh || r.slack < s.min_slack) {
                s.theorem = r.theorem;
                s.variant = r.variant;
                s.min_slack = r.slack;
                s.min_point = p.index;
            }
            switch (r.verdict) {
                case inequalities::Verdict::Equality: ++s.equality; break;
                case inequalities::Verdict::Strict: ++s.strict; break;
                case inequalities::Verdict::Violated: ++s.violated; break;
            }
        }
    }
    for (auto& [key, s] : by_key) rep.summary.push_back(s);
    for (const std::string& name : check_order) rep.checks_max.emplace_back(name, check_max[name]);
    return rep;
}

}  // namespace

bool RunReport::any_violated() const {
    return std::any_of(summary.begin(), summary.end(), [](const TheoremSummary& s) { return s.violated > 0; });
}

RunReport run(const Scenario& scenario, const RunOptions& options) {
    return assemble(scenario, evaluate_all(scenario, options));
}

RunReport validate(const Scenario& scenario, unsigned threads) {
    RunOptions options;
    options.threads = threads;
    options.theorems = false;
    return assemble(scenario, evaluate_all(scenario, options));
}

}  // namespace qcas::scenario
