#pragma once

#include "qcas/geometry/chart.hpp"
#include "qcas/inequalities/scene_data.hpp"
#include "qcas/maps/smooth_map.hpp"
#include "qcas/quaternionic/structure.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace qcas::scenario {

enum class SceneMode { Chart, Pointwise };

const char* to_string(SceneMode mode);

/// Thresholds applied during a run; every field can be overridden from the
/// scene file or the command line.
struct Tolerances {
    double equality = 1e-8;    ///< verdict threshold on normalized slack
    double space_form = 1e-6;  ///< chart curvature against the space-form oracle
    double isometry = 1e-6;    ///< horizontal isometry defect of the differential
    double kernel = 1e-8;      ///< relative singular-value threshold for the kernel
    double gauss = 1e-6;       ///< Gauss-type self-validation residuals

    /// Throws ConfigurationError for an unknown key or a non-positive value.
    void set(const std::string& key, double value);
    std::vector<std::pair<std::string, double>> items() const;
};

/// The combined theorems' δ(N): "zero" or "user:<value>".
struct DeltaN {
    std::string label;
    double value = 0.0;

    /// Throws ConfigurationError for any other form.
    static DeltaN parse(const std::string& text);
};

struct Sampling {
    int count = 0;
    std::uint64_t seed = 0;
    std::vector<double> lower;
    std::vector<double> upper;
};

struct ChartScene {
    std::shared_ptr<const maps::SmoothMap> map;
    std::optional<quaternionic::QuaternionicStructure> source_structure;
    std::optional<quaternionic::QuaternionicStructure> target_structure;
    maps::FiberModel fiber;
    std::vector<Vec> points;
    std::optional<Sampling> sampling;
};

struct Scenario {
    int version = 1;
    std::string name;
    std::string description;
    SceneMode mode = SceneMode::Pointwise;
    double c = 0.0;
    std::optional<DeltaN> deltaN;
    std::vector<inequalities::TheoremId> theorems;
    bool theorems_explicit = false;
    Tolerances tolerances;
    ChartScene chart;
    std::vector<inequalities::PointwiseScene> pointwise;

    int point_count() const {
        return mode == SceneMode::Chart ? static_cast<int>(chart.points.size()) : static_cast<int>(pointwise.size());
    }
};

/// Parses a scene file. Throws ParseError with the line and column of the
/// offending token or value.
Scenario parse_scenario(const std::string& text, const std::string& fallback_name = "scene");

/// Reads and parses a file; throws ConfigurationError if it cannot be read.
Scenario load_scenario_file(const std::string& path);

}  // namespace qcas::scenario
