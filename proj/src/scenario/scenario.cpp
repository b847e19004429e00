#include "qcas/scenario/scenario.hpp"

#include "qcas/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace qcas::scenario {

using nlohmann::json;
using inequalities::TheoremId;

namespace {

/// Byte offsets of every value (and of every object key) by JSON pointer. The
/// text must already be valid JSON.
class Locator {
public:
    explicit Locator(const std::string& text) : text_(text) {
        std::size_t pos = 0;
        scan(pos, "");
    }

    std::pair<std::size_t, std::size_t> line_column(std::size_t offset) const {
        std::size_t line = 1, column = 1;
        for (std::size_t i = 0; i < offset && i < text_.size(); ++i) {
            if (text_[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        return {line, column};
    }

    std::size_t value(const std::string& pointer) const {
        const auto it = values_.find(pointer);
        return it == values_.end() ? 0 : it->second;
    }

    std::size_t key(const std::string& pointer) const {
        const auto it = keys_.find(pointer);
        return it == keys_.end() ? value(pointer) : it->second;
    }

private:
    void skip_ws(std::size_t& pos) const {
        while (pos < text_.size() && (text_[pos] == ' ' || text_[pos] == '\n' || text_[pos] == '\r' || text_[pos] == '\t'))
            ++pos;
    }

    std::string read_string(std::size_t& pos) const {
        std::string out;
        ++pos;
        while (pos < text_.size() && text_[pos] != '"') {
            if (text_[pos] == '\\') {
                out += text_[pos + 1];
                pos += 2;
            } else {
                out += text_[pos++];
            }
        }
        ++pos;
        return out;
    }

    static std::string escape(const std::string& key) {
        std::string out;
        for (char ch : key) {
            if (ch == '~') out += "~0";
            else if (ch == '/') out += "~1";
            else out += ch;
        }
        return out;
    }

    void scan(std::size_t& pos, const std::string& pointer) {
        skip_ws(pos);
        values_[pointer] = pos;
        if (pos >= text_.size()) return;
        const char ch = text_[pos];
        if (ch == '{') {
            ++pos;
            skip_ws(pos);
            while (pos < text_.size() && text_[pos] != '}') {
                const std::size_t at = pos;
                const std::string child = pointer + "/" + escape(read_string(pos));
                keys_[child] = at;
                skip_ws(pos);
                ++pos;  // ':'
                scan(pos, child);
                skip_ws(pos);
                if (text_[pos] == ',') ++pos;
                skip_ws(pos);
            }
            ++pos;
        } else if (ch == '[') {
            ++pos;
            skip_ws(pos);
            for (int i = 0; pos < text_.size() && text_[pos] != ']'; ++i) {
                scan(pos, pointer + "/" + std::to_string(i));
                skip_ws(pos);
                if (text_[pos] == ',') ++pos;
                skip_ws(pos);
            }
            ++pos;
        } else if (ch == '"') {
            read_string(pos);
        } else {
            while (pos < text_.size() && text_[pos] != ',' && text_[pos] != '}' && text_[pos] != ']' && text_[pos] != ' ' &&
                   text_[pos] != '\n' && text_[pos] != '\r' && text_[pos] != '\t')
                ++pos;
        }
    }

    const std::string& text_;
    std::map<std::string, std::size_t> values_;
    std::map<std::string, std::size_t> keys_;
};

/// A JSON node together with its pointer, for located error messages.
class Node {
public:
    Node(const json& j, std::string pointer, const Locator& loc) : j_(j), pointer_(std::move(pointer)), loc_(loc) {}

    const json& raw() const { return j_; }
    const std::string& pointer() const { return pointer_; }

    [[noreturn]] void fail(const std::string& message) const { fail_at(loc_.value(pointer_), message); }

    [[noreturn]] void fail_at(std::size_t offset, const std::string& message) const {
        const auto [line, column] = loc_.line_column(offset);
        throw ParseError(message + " at '" + (pointer_.empty() ? "/" : pointer_) + "'", line, column);
    }

    bool has(const std::string& key) const { return j_.is_object() && j_.contains(key); }

    Node operator[](const std::string& key) const {
        if (!has(key)) fail("missing required key '" + key + "'");
        return Node(j_.at(key), pointer_ + "/" + key, loc_);
    }

    Node operator[](std::size_t i) const { return Node(j_.at(i), pointer_ + "/" + std::to_string(i), loc_); }

    std::size_t size() const { return j_.size(); }

    void only_keys(std::initializer_list<const char*> allowed) const {
        if (!j_.is_object()) fail("expected an object");
        const std::set<std::string> ok(allowed.begin(), allowed.end());
        for (const auto& [key, value] : j_.items())
            if (!ok.count(key)) fail_at(loc_.key(pointer_ + "/" + key), "unknown key '" + key + "'");
    }

    double number() const {
        if (!j_.is_number()) fail("expected a number");
        return j_.get<double>();
    }

    int integer() const {
        if (!j_.is_number_integer()) fail("expected an integer");
        return j_.get<int>();
    }

    std::uint64_t unsigned_integer() const {
        if (!j_.is_number_unsigned() && !(j_.is_number_integer() && j_.get<long long>() >= 0))
            fail("expected a non-negative integer");
        return j_.get<std::uint64_t>();
    }

    std::string string() const {
        if (!j_.is_string()) fail("expected a string");
        return j_.get<std::string>();
    }

    const json& array() const {
        if (!j_.is_array()) fail("expected an array");
        return j_;
    }

    Vec vector() const {
        array();
        Vec v(static_cast<Eigen::Index>(size()));
        for (std::size_t i = 0; i < size(); ++i) v(static_cast<Eigen::Index>(i)) = (*this)[i].number();
        return v;
    }

    Mat matrix() const {
        array();
        const std::size_t rows = size();
        if (rows == 0) return Mat(0, 0);
        const std::size_t cols = (*this)[0].array().size();
        Mat m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
        for (std::size_t r = 0; r < rows; ++r) {
            const Node row = (*this)[r];
            if (row.array().size() != cols) row.fail("ragged matrix row");
            for (std::size_t c = 0; c < cols; ++c)
                m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = row[c].number();
        }
        return m;
    }

    MatList matrices() const {
        array();
        MatList out;
        for (std::size_t i = 0; i < size(); ++i) out.push_back((*this)[i].matrix());
        return out;
    }

    VecList vectors() const {
        array();
        VecList out;
        for (std::size_t i = 0; i < size(); ++i) out.push_back((*this)[i].vector());
        return out;
    }

private:
    const json& j_;
    std::string pointer_;
    const Locator& loc_;
};

/// Runs `f`, relocating engine errors to the node that produced them.
template <class F>
auto located(const Node& node, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        node.fail(e.kind() + " error: " + e.what());
    }
}

/// Reads an expression string, reporting syntax errors at its place in the file.
std::string expression_text(const Node& node, const std::vector<std::string>& variables) {
    const std::string text = node.raw().is_number() ? node.raw().dump() : node.string();
    try {
        geometry::Expression::parse(text, variables);
    } catch (const ParseError& e) {
        node.fail(std::string("expression error: ") + e.what());
    }
    return text;
}

std::shared_ptr<const geometry::MetricChart> parse_chart(const Node& node) {
    if (node.raw().is_string()) {
        const std::string name = node.string();
        return located(node, [&] { return std::make_shared<const geometry::MetricChart>(geometry::MetricChart::builtin(name)); });
    }
    node.only_keys({"name", "coords", "metric", "domain"});
    const Node coords_node = node["coords"];
    std::vector<std::string> coords;
    for (std::size_t i = 0; i < coords_node.array().size(); ++i) coords.push_back(coords_node[i].string());
    const std::size_t n = coords.size();
    geometry::Box box = geometry::Box::unbounded(n);
    if (node.has("domain")) {
        const Node domain = node["domain"];
        domain.only_keys({"lower", "upper"});
        for (const char* side : {"lower", "upper"}) {
            if (!domain.has(side)) continue;
            const Node bounds = domain[side];
            if (bounds.array().size() != n) bounds.fail("domain bounds need one entry per coordinate");
            auto& target = std::string(side) == "lower" ? box.lower : box.upper;
            for (std::size_t i = 0; i < n; ++i)
                if (!bounds[i].raw().is_null()) target[i] = bounds[i].number();
        }
    }
    const Node metric = node["metric"];
    std::vector<std::vector<std::string>> rows;
    for (std::size_t r = 0; r < metric.array().size(); ++r) {
        const Node row = metric[r];
        std::vector<std::string> entries;
        for (std::size_t c = 0; c < row.array().size(); ++c) {
            entries.push_back(expression_text(row[c], coords));
        }
        rows.push_back(std::move(entries));
    }
    const std::string name = node.has("name") ? node["name"].string() : "chart";
    return located(node, [&] {
        return std::make_shared<const geometry::MetricChart>(name, coords, box, rows);
    });
}

quaternionic::QuaternionicStructure parse_structure(const Node& node) {
    if (node.raw().is_string()) {
        const std::string name = node.string();
        return located(node, [&] { return quaternionic::QuaternionicStructure::builtin(name); });
    }
    node.only_keys({"J1", "J2", "J3"});
    std::array<Mat, 3> J{node["J1"].matrix(), node["J2"].matrix(), node["J3"].matrix()};
    return located(node, [&] { return quaternionic::QuaternionicStructure(J); });
}

maps::MapMode parse_map_mode(const Node& node) {
    const std::string text = node.string();
    if (text == "riemannian_map") return maps::MapMode::RiemannianMap;
    if (text == "riemannian_submersion") return maps::MapMode::RiemannianSubmersion;
    node.fail("map_mode must be 'riemannian_map' or 'riemannian_submersion'");
}

std::vector<Vec> sample_points(const Sampling& s) {
    std::mt19937_64 rng(s.seed);
    std::vector<Vec> out;
    const std::size_t n = s.lower.size();
    for (int k = 0; k < s.count; ++k) {
        Vec x(static_cast<Eigen::Index>(n));
        for (std::size_t i = 0; i < n; ++i) {
            std::uniform_real_distribution<double> u(s.lower[i], s.upper[i]);
            x(static_cast<Eigen::Index>(i)) = u(rng);
        }
        out.push_back(x);
    }
    return out;
}

void parse_chart_scene(const Node& node, Scenario& sc) {
    node.only_keys({"source", "target", "map", "map_mode", "rank", "source_structure", "target_structure",
                    "fiber_curvature", "points", "sampling"});
    const auto source = parse_chart(node["source"]);
    const auto target = parse_chart(node["target"]);
    const Node components_node = node["map"];
    std::vector<std::string> components;
    for (std::size_t i = 0; i < components_node.array().size(); ++i)
        components.push_back(expression_text(components_node[i], source->coords()));
    const maps::MapMode mode = parse_map_mode(node["map_mode"]);
    const int rank = node["rank"].integer();
    sc.chart.map = located(node, [&] { return std::make_shared<const maps::SmoothMap>(source, target, components, mode, rank); });
    if (node.has("source_structure")) sc.chart.source_structure = parse_structure(node["source_structure"]);
    if (node.has("target_structure")) sc.chart.target_structure = parse_structure(node["target_structure"]);
    if (node.has("fiber_curvature")) {
        const Node fiber = node["fiber_curvature"];
        const std::string text = fiber.string();
        sc.chart.fiber = located(fiber, [&] { return maps::FiberModel::parse(text, source->dim()); });
    } else {
        sc.chart.fiber = maps::FiberModel::parse("derived", source->dim());
    }

    if (node.has("points") == node.has("sampling")) node.fail("exactly one of 'points' and 'sampling' is required");
    if (node.has("points")) {
        const Node points = node["points"];
        for (std::size_t i = 0; i < points.array().size(); ++i) {
            const Node p = points[i];
            Vec x = p.vector();
            if (x.size() != source->dim()) p.fail("point dimension differs from the source chart");
            sc.chart.points.push_back(std::move(x));
        }
    } else {
        const Node sampling = node["sampling"];
        sampling.only_keys({"count", "seed", "lower", "upper"});
        Sampling s;
        s.count = sampling["count"].integer();
        if (s.count < 1) sampling["count"].fail("sampling count must be positive");
        s.seed = sampling["seed"].unsigned_integer();
        const Vec lower = sampling["lower"].vector();
        const Vec upper = sampling["upper"].vector();
        if (lower.size() != source->dim() || upper.size() != source->dim())
            sampling.fail("sampling box dimension differs from the source chart");
        for (Eigen::Index i = 0; i < lower.size(); ++i) {
            if (!(lower(i) < upper(i))) sampling.fail("sampling box must have lower < upper");
            s.lower.push_back(lower(i));
            s.upper.push_back(upper(i));
        }
        sc.chart.points = sample_points(s);
        sc.chart.sampling = s;
    }
}

geometry::OrthoFrame frame_of(const Node& node, const Mat& g) {
    geometry::OrthoFrame f;
    f.vectors = node.vectors();
    f.metric_at = g;
    return f;
}

void parse_pointwise_scene(const Node& node, Scenario& sc) {
    node.only_keys({"structure", "metric", "points"});
    const quaternionic::QuaternionicStructure structure = parse_structure(node["structure"]);
    const int n = structure.dim();
    const Mat metric = node.has("metric") ? node["metric"].matrix() : Mat::Identity(n, n);
    const Node points = node["points"];
    if (points.array().empty()) points.fail("at least one point is required");
    for (std::size_t i = 0; i < points.size(); ++i) {
        const Node p = points[i];
        p.only_keys({"first", "second", "B", "T", "A"});
        inequalities::PointwiseScene scene;
        scene.c = sc.c;
        scene.structure = structure;
        scene.metric = metric;
        scene.first = frame_of(p["first"], metric);
        scene.second = frame_of(p["second"], metric);
        if (p.has("B")) scene.B = p["B"].matrices();
        if (p.has("T")) scene.T = p["T"].matrices();
        if (p.has("A")) scene.A = p["A"].matrices();
        sc.pointwise.push_back(std::move(scene));
    }
}

/// Theorems whose dimensional preconditions hold, used when none are listed.
std::vector<TheoremId> applicable(const Scenario& sc) {
    std::vector<TheoremId> out;
    int first = 0, second = 0;
    bool map_ok = false, submersion = false;
    if (sc.mode == SceneMode::Chart) {
        const maps::SmoothMap& m = *sc.chart.map;
        first = m.rank();
        second = m.source().dim() - m.rank();
        submersion = m.mode() == maps::MapMode::RiemannianSubmersion;
        map_ok = !submersion || sc.chart.target_structure.has_value();
    } else {
        first = sc.pointwise.front().first.size();
        second = sc.pointwise.front().second.size();
        submersion = map_ok = true;
    }
    if (map_ok && first >= 3) out.push_back(TheoremId::Map32);
    if (submersion && second >= 3) out.push_back(TheoremId::Vertical52);
    if (submersion && first >= 3) out.push_back(TheoremId::Horizontal62);
    if (submersion && first >= 3 && second >= 3 && sc.deltaN) out.push_back(TheoremId::Combined72);
    return out;
}

}  // namespace

const char* to_string(SceneMode mode) { return mode == SceneMode::Chart ? "chart" : "pointwise"; }

void Tolerances::set(const std::string& key, double value) {
    if (!(value > 0.0)) throw ConfigurationError("tolerance '" + key + "' must be positive");
    if (key == "equality") equality = value;
    else if (key == "space_form") space_form = value;
    else if (key == "isometry") isometry = value;
    else if (key == "kernel") kernel = value;
    else if (key == "gauss") gauss = value;
    else throw ConfigurationError("unknown tolerance '" + key + "'");
}

std::vector<std::pair<std::string, double>> Tolerances::items() const {
    return {{"equality", equality}, {"space_form", space_form}, {"isometry", isometry}, {"kernel", kernel}, {"gauss", gauss}};
}

DeltaN DeltaN::parse(const std::string& text) {
    if (text == "zero") return {text, 0.0};
    constexpr std::string_view prefix = "user:";
    if (text.rfind(prefix, 0) == 0) {
        double v = 0.0;
        const char* first = text.data() + prefix.size();
        const char* last = text.data() + text.size();
        const auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec == std::errc() && ptr == last && first != last) return {text, v};
    }
    throw ConfigurationError("deltaN must be 'zero' or 'user:<value>', got '" + text + "'");
}

Scenario parse_scenario(const std::string& text, const std::string& fallback_name) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        std::size_t line = 1, column = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        std::string message = e.what();
        const auto colon = message.find("syntax error");
        throw ParseError(colon == std::string::npos ? message : message.substr(colon), line, column);
    }
    const Locator loc(text);
    const Node top(root, "", loc);
    top.only_keys({"version", "name", "description", "mode", "c", "deltaN", "theorems", "tolerances", "chart", "pointwise"});

    Scenario sc;
    sc.version = top["version"].integer();
    if (sc.version != 1) top["version"].fail("unsupported scene version " + std::to_string(sc.version));
    sc.name = top.has("name") ? top["name"].string() : fallback_name;
    if (top.has("description")) sc.description = top["description"].string();
    const Node mode = top["mode"];
    const std::string mode_text = mode.string();
    if (mode_text == "chart") sc.mode = SceneMode::Chart;
    else if (mode_text == "pointwise") sc.mode = SceneMode::Pointwise;
    else mode.fail("mode must be 'chart' or 'pointwise'");
    sc.c = top["c"].number();
    if (top.has("deltaN")) {
        const Node d = top["deltaN"];
        const std::string label = d.string();
        sc.deltaN = located(d, [&] { return DeltaN::parse(label); });
    }
    sc.tolerances.equality = sc.mode == SceneMode::Chart ? 1e-5 : 1e-8;
    if (top.has("tolerances")) {
        const Node t = top["tolerances"];
        t.only_keys({"equality", "space_form", "isometry", "kernel", "gauss"});
        for (const auto& [key, value] : t.raw().items()) {
            const Node v = t[key];
            const double x = v.number();
            located(v, [&] { sc.tolerances.set(key, x); });
        }
    }

    if (sc.mode == SceneMode::Chart) {
        if (top.has("pointwise")) top.fail_at(loc.key("/pointwise"), "chart scenes take no 'pointwise' block");
        parse_chart_scene(top["chart"], sc);
    } else {
        if (top.has("chart")) top.fail_at(loc.key("/chart"), "pointwise scenes take no 'chart' block");
        parse_pointwise_scene(top["pointwise"], sc);
    }

    if (top.has("theorems")) {
        const Node list = top["theorems"];
        for (std::size_t i = 0; i < list.array().size(); ++i) {
            const Node item = list[i];
            const auto id = inequalities::parse_theorem_id(item.string());
            const auto& all = inequalities::all_theorems();
            if (!id || std::find(all.begin(), all.end(), *id) == all.end())
                item.fail("unknown theorem '" + item.string() + "'");
            sc.theorems.push_back(*id);
        }
        sc.theorems_explicit = true;
    } else {
        sc.theorems = applicable(sc);
    }
    if (!sc.deltaN && std::find(sc.theorems.begin(), sc.theorems.end(), TheoremId::Combined72) != sc.theorems.end())
        top["theorems"].fail("the combined theorem needs an explicit deltaN");
    if (sc.mode == SceneMode::Chart && sc.chart.map->mode() == maps::MapMode::RiemannianMap)
        for (TheoremId id : sc.theorems)
            if (id != TheoremId::Map32) top["theorems"].fail("submersion theorems need map_mode 'riemannian_submersion'");
    return sc;
}

Scenario load_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigurationError("cannot read scene file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::string stem = path;
    if (const auto slash = stem.find_last_of('/'); slash != std::string::npos) stem = stem.substr(slash + 1);
    if (const auto dot = stem.rfind('.'); dot != std::string::npos) stem = stem.substr(0, dot);
    return parse_scenario(buffer.str(), stem);
}

}  // namespace qcas::scenario
