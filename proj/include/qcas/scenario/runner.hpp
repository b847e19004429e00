#pragma once

#include "qcas/scenario/scenario.hpp"

#include <string>
#include <utility>
#include <vector>

namespace qcas::scenario {

/// Outcome at one evaluation point. Invalid points carry the error instead of
/// theorem reports.
struct PointResult {
    int index = 0;
    Vec x;  ///< chart coordinates; empty in pointwise mode
    bool valid = true;
    std::string error_kind;
    std::string error_message;
    /// Self-validation quantities in a fixed order (isometry defect, Gauss
    /// residuals, space-form mismatch, bracket residual, …).
    std::vector<std::pair<std::string, double>> checks;
    std::vector<inequalities::TheoremReport> reports;
};

struct TheoremSummary {
    inequalities::TheoremId theorem = inequalities::TheoremId::Map32;
    inequalities::Variant variant = inequalities::Variant::Delta;
    double min_slack = 0.0;
    int min_point = -1;
    int equality = 0;
    int strict = 0;
    int violated = 0;
};

struct RunReport {
    std::string scene;
    SceneMode mode = SceneMode::Pointwise;
    double c = 0.0;
    std::optional<DeltaN> deltaN;
    Tolerances tolerances;
    std::vector<inequalities::TheoremId> theorems;
    std::vector<PointResult> points;  ///< sorted by point index
    std::vector<TheoremSummary> summary;
    std::vector<std::pair<std::string, double>> checks_max;
    int invalid_points = 0;

    bool any_violated() const;
};

struct RunOptions {
    unsigned threads = 0;     ///< 0 uses the hardware concurrency
    bool theorems = true;     ///< false only validates the scene
    inequalities::CheckOptions check;
};

/// Evaluates every point (in parallel) and assembles an order-stable report.
/// Per-point failures are recorded, never thrown.
RunReport run(const Scenario& scenario, const RunOptions& options = {});

/// Runs all scene invariants without theorem evaluation.
RunReport validate(const Scenario& scenario, unsigned threads = 0);

}  // namespace qcas::scenario
