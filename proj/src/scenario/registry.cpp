#include "qcas/scenario/registry.hpp"

#include "qcas/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <filesystem>

namespace qcas::scenario {

namespace {

const char* const kProductProjection = R"scene({
  "version": 1,
  "name": "product-projection:8to4",
  "description": "Projection of flat R^8 onto its first four coordinates",
  "mode": "chart",
  "c": 0,
  "deltaN": "zero",
  "chart": {
    "source": "flat:8",
    "target": "flat:4",
    "map": ["x1", "x2", "x3", "x4"],
    "map_mode": "riemannian_submersion",
    "rank": 4,
    "source_structure": "quat-flat:2",
    "target_structure": "quat-flat:1",
    "fiber_curvature": "flat",
    "sampling": {"count": 4, "seed": 7, "lower": [-1, -1, -1, -1, -1, -1, -1, -1], "upper": [1, 1, 1, 1, 1, 1, 1, 1]}
  }
})scene";

const char* const kRadial = R"scene({
  "version": 1,
  "name": "radial:4",
  "description": "Distance from the origin on R^4; fibers are round 3-spheres of radius r = 0.5, 1, 2",
  "mode": "chart",
  "c": 0,
  "chart": {
    "source": "flat:4",
    "target": "flat:1",
    "map": ["norm(x1, x2, x3, x4)"],
    "map_mode": "riemannian_submersion",
    "rank": 1,
    "source_structure": "quat-flat:1",
    "fiber_curvature": "round-sphere",
    "points": [[0.05, -0.25, 0.35, 0.25], [0.1, -0.5, 0.7, 0.5], [0.2, -1, 1.4, 1]]
  }
})scene";

const char* const kParaboloid = R"scene({
  "version": 1,
  "name": "paraboloid-vertex",
  "description": "Isometric immersion of the paraboloid z = (x^2 + y^2)/2 into R^3",
  "mode": "chart",
  "c": 0,
  "chart": {
    "source": {"name": "paraboloid", "coords": ["x1", "x2"],
               "metric": [["1 + x1^2", "x1*x2"], ["x1*x2", "1 + x2^2"]]},
    "target": "flat:3",
    "map": ["x1", "x2", "(x1^2 + x2^2)/2"],
    "map_mode": "riemannian_map",
    "rank": 2,
    "points": [[0, 0], [0.3, -0.2], [0.5, 0.4]]
  }
})scene";

const char* const kParaboloid3 = R"scene({
  "version": 1,
  "name": "paraboloid-vertex:3in4",
  "description": "Isometric immersion of the hypersurface w = |x|^2/2 into flat quaternionic R^4",
  "mode": "chart",
  "c": 0,
  "chart": {
    "source": {"name": "paraboloid3", "coords": ["x1", "x2", "x3"],
               "metric": [["1 + x1^2", "x1*x2", "x1*x3"], ["x1*x2", "1 + x2^2", "x2*x3"], ["x1*x3", "x2*x3", "1 + x3^2"]]},
    "target": "flat:4",
    "map": ["x1", "x2", "x3", "(x1^2 + x2^2 + x3^2)/2"],
    "map_mode": "riemannian_map",
    "rank": 3,
    "target_structure": "quat-flat:1",
    "points": [[0, 0, 0], [0.2, -0.1, 0.3]]
  }
})scene";

const char* const kFlatEmbedding = R"scene({
  "version": 1,
  "name": "flat-embedding:2in4",
  "description": "Rotated linear isometric embedding of R^2 into R^4",
  "mode": "chart",
  "c": 0,
  "chart": {
    "source": "flat:2",
    "target": "flat:4",
    "map": ["(x1 + x2)/sqrt(2)", "(x1 - x2)/sqrt(2)", "0", "0"],
    "map_mode": "riemannian_map",
    "rank": 2,
    "target_structure": "quat-flat:1",
    "sampling": {"count": 5, "seed": 11, "lower": [-1, -1], "upper": [1, 1]}
  }
})scene";

const char* const kHopfCone = R"scene({
  "version": 1,
  "name": "hopf-cone:4to3",
  "description": "Cone over the Hopf fibration: R^4 minus a plane onto radius and the stereographic Hopf coordinate",
  "mode": "chart",
  "c": 0,
  "chart": {
    "source": "flat:4",
    "target": {"name": "hopf-cone", "coords": ["r", "a", "b"],
               "metric": [["1", "0", "0"], ["0", "r^2/(1 + a^2 + b^2)^2", "0"], ["0", "0", "r^2/(1 + a^2 + b^2)^2"]]},
    "map": ["norm(x1, x2, x3, x4)", "(x1*x3 + x2*x4)/(x3^2 + x4^2)", "(x2*x3 - x1*x4)/(x3^2 + x4^2)"],
    "map_mode": "riemannian_submersion",
    "rank": 3,
    "source_structure": "quat-flat:1",
    "fiber_curvature": "derived",
    "points": [[0.3, -0.5, 0.7, 0.4], [1, 0.5, -0.5, 1], [-0.2, 0.1, 0.3, -0.6]]
  }
})scene";

}  // namespace

const std::vector<BuiltinScene>& builtin_scenes() {
    static const std::vector<BuiltinScene> scenes = [] {
        std::vector<BuiltinScene> out;
        for (const char* text : {kFlatEmbedding, kHopfCone, kParaboloid, kParaboloid3, kProductProjection, kRadial}) {
            const auto j = nlohmann::json::parse(text);
            out.push_back({j.at("name").get<std::string>(), "chart", j.value("description", ""), text});
        }
        std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
        for (const EmbeddedScene& e : embedded_scenes()) {
            std::string description, kind = "invalid";
            try {
                const auto j = nlohmann::json::parse(e.json);
                description = j.value("description", "");
                kind = j.value("mode", "invalid");
            } catch (const nlohmann::json::exception&) {
            }
            out.push_back({e.stem, kind, description, e.json});
        }
        return out;
    }();
    return scenes;
}

const BuiltinScene* find_builtin(const std::string& name) {
    for (const BuiltinScene& s : builtin_scenes())
        if (s.name == name) return &s;
    return nullptr;
}

Scenario load_builtin(const std::string& name) {
    const BuiltinScene* s = find_builtin(name);
    if (!s) throw ConfigurationError("unknown builtin scene '" + name + "'");
    return parse_scenario(s->json, s->name);
}

Scenario resolve_scenario(const std::string& name_or_path) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(name_or_path, ec)) return load_scenario_file(name_or_path);
    if (find_builtin(name_or_path)) return load_builtin(name_or_path);
    throw ConfigurationError("'" + name_or_path + "' is neither a scene file nor a builtin scene");
}

}  // namespace qcas::scenario
