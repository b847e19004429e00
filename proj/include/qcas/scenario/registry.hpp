#pragma once

#include "qcas/scenario/scenario.hpp"

#include <string>
#include <vector>

namespace qcas::scenario {

/// A scene file compiled into the binary (generated from scenes/*.json).
struct EmbeddedScene {
    std::string stem;
    std::string json;
};

const std::vector<EmbeddedScene>& embedded_scenes();

struct BuiltinScene {
    std::string name;
    std::string kind;  ///< "chart" or "pointwise"
    std::string description;
    std::string json;
};

/// Chart scenes first, then the embedded fixtures, each group in name order.
const std::vector<BuiltinScene>& builtin_scenes();

/// nullptr when absent.
const BuiltinScene* find_builtin(const std::string& name);

/// Parses a builtin by name.
Scenario load_builtin(const std::string& name);

/// A path to an existing file, otherwise a builtin name. Throws
/// ConfigurationError if neither resolves.
Scenario resolve_scenario(const std::string& name_or_path);

}  // namespace qcas::scenario
