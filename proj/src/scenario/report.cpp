#include "qcas/scenario/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>

namespace qcas::scenario {

using ojson = nlohmann::ordered_json;
using inequalities::TheoremReport;

namespace {

ojson vec_json(const Vec& v) {
    ojson a = ojson::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
    return a;
}

ojson pairs_json(const std::vector<std::pair<std::string, double>>& items) {
    ojson o = ojson::object();
    for (const auto& [k, v] : items) o[k] = v;
    return o;
}

ojson audit_json(const casorati::ExtremumAudit& a) {
    return ojson{{"start_index", a.start_index},
                 {"iterations", a.iterations},
                 {"gradient_norm", a.gradient_norm},
                 {"degenerate", a.degenerate}};
}

ojson extrema_json(const casorati::HyperplaneExtrema& e) {
    return ojson{{"inf_CL", e.inf_CL},
                 {"sup_CL", e.sup_CL},
                 {"argmin_normal", vec_json(e.argmin_normal)},
                 {"argmax_normal", vec_json(e.argmax_normal)},
                 {"certified", e.certified},
                 {"certified_gap", e.certified_gap},
                 {"min", audit_json(e.min_audit)},
                 {"max", audit_json(e.max_audit)}};
}

ojson diagnostics_json(const inequalities::EqualityDiagnostics& d) {
    ojson o{{"offdiag_max", d.offdiag_max},
            {"eigen_pattern_residual", d.eigen_pattern_residual},
            {"common_eigendirection_residual", d.common_eigendirection_residual},
            {"commutator_max", d.commutator_max},
            {"A_norm", d.A_norm}};
    o["bracket_verticality_residual"] = d.bracket_verticality_residual ? ojson(*d.bracket_verticality_residual) : ojson();
    o["scale"] = d.scale;
    o["quasi_umbilical"] = d.quasi_umbilical();
    o["diagonal"] = d.diagonal();
    o["integrable"] = d.integrable();
    return o;
}

ojson deltaN_json(const RunReport& rep) { return rep.deltaN ? ojson(rep.deltaN->label) : ojson(); }

ojson report_json(const RunReport& rep, const PointResult& p, const TheoremReport& r) {
    ojson o;
    o["theorem_id"] = inequalities::to_string(r.theorem);
    o["variant"] = inequalities::to_string(r.variant);
    o["point"] = p.index;
    o["lhs"] = r.lhs;
    o["rhs"] = r.rhs;
    o["slack"] = r.slack;
    o["verdict"] = inequalities::to_string(r.verdict);
    o["diagnostics"] = diagnostics_json(r.diagnostics);
    o["terms"] = pairs_json(r.terms);
    ojson optimizer = ojson::object();
    for (const auto& [name, e] : r.optimizer) optimizer[name] = extrema_json(e);
    o["provenance"] = ojson{{"scene", rep.scene},
                            {"c", rep.c},
                            {"deltaN", deltaN_json(rep)},
                            {"tolerances", pairs_json(rep.tolerances.items())},
                            {"optimizer", optimizer}};
    return o;
}

ojson build(const RunReport& rep) {
    ojson o;
    o["format"] = "qcas-report";
    o["version"] = 1;
    o["scene"] = rep.scene;
    o["mode"] = to_string(rep.mode);
    o["c"] = rep.c;
    o["deltaN"] = deltaN_json(rep);
    o["tolerances"] = pairs_json(rep.tolerances.items());
    ojson theorems = ojson::array();
    for (auto id : rep.theorems) theorems.push_back(inequalities::to_string(id));
    o["theorems"] = theorems;

    ojson points = ojson::array();
    for (const PointResult& p : rep.points) {
        ojson q;
        q["index"] = p.index;
        if (p.x.size() > 0) q["x"] = vec_json(p.x);
        q["status"] = p.valid ? "ok" : "invalid";
        if (!p.valid) q["error"] = ojson{{"kind", p.error_kind}, {"message", p.error_message}};
        q["checks"] = pairs_json(p.checks);
        ojson reports = ojson::array();
        for (const TheoremReport& r : p.reports) reports.push_back(report_json(rep, p, r));
        q["reports"] = reports;
        points.push_back(q);
    }
    o["points"] = points;

    ojson summary;
    summary["points"] = rep.points.size();
    summary["invalid_points"] = rep.invalid_points;
    ojson per = ojson::array();
    for (const TheoremSummary& s : rep.summary)
        per.push_back(ojson{{"theorem_id", inequalities::to_string(s.theorem)},
                            {"variant", inequalities::to_string(s.variant)},
                            {"min_slack", s.min_slack},
                            {"min_point", s.min_point},
                            {"equality", s.equality},
                            {"strict", s.strict},
                            {"violated", s.violated}});
    summary["theorems"] = per;
    summary["checks_max"] = pairs_json(rep.checks_max);
    o["summary"] = summary;
    return o;
}

/// Serializer with shortest round-trip floats; nlohmann handles strings.
void write(const ojson& j, std::string& out, int indent) {
    const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
    const std::string close(static_cast<std::size_t>(indent), ' ');
    switch (j.type()) {
        case ojson::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            bool first = true;
            for (const auto& [key, value] : j.items()) {
                if (!first) out += ",\n";
                first = false;
                out += pad + ojson(key).dump() + ": ";
                write(value, out, indent + 2);
            }
            out += "\n" + close + "}";
            return;
        }
        case ojson::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            const bool flat = std::all_of(j.begin(), j.end(), [](const ojson& v) { return v.is_primitive(); });
            if (flat) {
                out += "[";
                for (std::size_t i = 0; i < j.size(); ++i) {
                    if (i) out += ", ";
                    write(j[i], out, indent + 2);
                }
                out += "]";
                return;
            }
            out += "[\n";
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i) out += ",\n";
                out += pad;
                write(j[i], out, indent + 2);
            }
            out += "\n" + close + "]";
            return;
        }
        case ojson::value_t::number_float: out += format_number(j.get<double>()); return;
        default: out += j.dump(); return;
    }
}

}  // namespace

std::string format_number(double value) {
    if (!std::isfinite(value)) return "null";
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, ptr);
}

std::string to_json(const RunReport& report) {
    std::string out;
    write(build(report), out, 0);
    out += "\n";
    return out;
}

std::string to_csv(const RunReport& report) {
    std::string out = "point,theorem,variant,lhs,rhs,slack,verdict\n";
    for (const PointResult& p : report.points)
        for (const TheoremReport& r : p.reports) {
            out += std::to_string(p.index) + "," + inequalities::to_string(r.theorem) + "," +
                   inequalities::to_string(r.variant) + "," + format_number(r.lhs) + "," + format_number(r.rhs) + "," +
                   format_number(r.slack) + "," + inequalities::to_string(r.verdict) + "\n";
        }
    return out;
}

}  // namespace qcas::scenario
