#include "qcas/inequalities/theorems.hpp"

#include "qcas/errors.hpp"
#include "qcas/inequalities/algebraic.hpp"

#include <algorithm>
#include <cmath>

namespace qcas::inequalities {

namespace {

struct Names {
    TheoremId id;
    const char* name;
};

constexpr Names kNames[] = {
    {TheoremId::Map32, "map_3_2"},
    {TheoremId::Vertical52, "vertical_5_2"},
    {TheoremId::Horizontal62, "horizontal_6_2"},
    {TheoremId::Combined72, "combined_7_2"},
    {TheoremId::LemmaMap31, "lemma_map_3_1"},
    {TheoremId::LemmaVertical51, "lemma_vertical_5_1"},
    {TheoremId::LemmaHorizontal61, "lemma_horizontal_6_1"},
    {TheoremId::LemmaCombined71, "lemma_combined_7_1"},
};

double sum3(const std::array<double, 3>& a) { return a[0] + a[1] + a[2]; }

/// C, hyperplane extrema and both δ values of one distribution tensor.
struct Side {
    double C = 0.0;
    casorati::HyperplaneExtrema extrema;
    casorati::DeltaCasorati delta;
};

Side side(const casorati::CasoratiInput& h, const CheckOptions& options) {
    if (h.n_dist < 3) throw DimensionError("the theorems need a distribution of dimension >= 3");
    Side out;
    out.C = casorati::casorati(h);
    out.extrema = casorati::hyperplane_extrema(h, options.extrema);
    out.delta = casorati::delta_casorati(out.C, out.extrema, h.n_dist);
    return out;
}

double pick(const casorati::DeltaCasorati& d, Variant v) { return v == Variant::Delta ? d.delta : d.delta_hat; }

TheoremReport make(TheoremId id, Variant v, double lhs, double rhs, const EqualityDiagnostics& diag,
                   std::vector<std::pair<std::string, double>> terms, double tol) {
    TheoremReport r;
    r.theorem = id;
    r.variant = v;
    r.lhs = lhs;
    r.rhs = rhs;
    r.slack = rhs - lhs;
    r.verdict = classify(lhs, rhs, tol);
    r.diagnostics = diag;
    r.terms = std::move(terms);
    return r;
}

void append_side(std::vector<std::pair<std::string, double>>& terms, const std::string& prefix, const Side& s) {
    terms.emplace_back(prefix + "C", s.C);
    terms.emplace_back(prefix + "inf_CL", s.extrema.inf_CL);
    terms.emplace_back(prefix + "sup_CL", s.extrema.sup_CL);
    terms.emplace_back(prefix + "delta_C", s.delta.delta);
    terms.emplace_back(prefix + "delta_hat_C", s.delta.delta_hat);
}

/// Shared shape of the three single-distribution theorems:
/// ρ ≤ δ + ρ_ambient (lemma) and ρ ≤ δ + c/4 + 3c/(4k(k−1)) Σ norms (theorem).
std::vector<TheoremReport> single(TheoremId theorem, TheoremId lemma, const char* tensor, const casorati::CasoratiInput& h,
                                  const Side& sd, double two_tau, double two_tau_ambient, const std::array<double, 3>& norms, double c,
                                  const EqualityDiagnostics& diag, bool require_integrable, const CheckOptions& options) {
    const int k = h.n_dist;
    const double kk = k * (k - 1.0);
    const double rho = two_tau / kk;
    const double rho_ambient = two_tau_ambient / kk;
    const double rho_closed = c / 4.0 + 3.0 * c / (4.0 * kk) * sum3(norms);

    std::vector<std::pair<std::string, double>> terms;
    terms.emplace_back("dimension", k);
    terms.emplace_back("c", c);
    append_side(terms, "", sd);
    terms.emplace_back("rho", rho);
    terms.emplace_back("rho_ambient", rho_ambient);
    terms.emplace_back("rho_ambient_closed_form", rho_closed);
    terms.emplace_back("sum_norms", sum3(norms));

    std::vector<TheoremReport> out;
    for (auto [id, ambient] : {std::pair{theorem, rho_closed}, std::pair{lemma, rho_ambient}})
        for (Variant v : {Variant::Delta, Variant::DeltaHat}) {
            TheoremReport r = make(id, v, rho, pick(sd.delta, v) + ambient, diag, terms, options.tolerance);
            r.optimizer.emplace_back(tensor, sd.extrema);
            if (require_integrable && r.verdict == Verdict::Equality && !diag.integrable(1e-8)) r.verdict = Verdict::Strict;
            out.push_back(std::move(r));
        }
    return out;
}

}  // namespace

const char* to_string(TheoremId id) {
    for (const auto& n : kNames)
        if (n.id == id) return n.name;
    return "unknown";
}

const char* to_string(Variant v) { return v == Variant::Delta ? "delta" : "delta_hat"; }

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Equality: return "equality";
        case Verdict::Violated: return "violated";
        default: return "strict";
    }
}

std::optional<TheoremId> parse_theorem_id(const std::string& name) {
    for (const auto& n : kNames)
        if (name == n.name) return n.id;
    return std::nullopt;
}

const std::vector<TheoremId>& all_theorems() {
    static const std::vector<TheoremId> ids = {TheoremId::Map32, TheoremId::Vertical52, TheoremId::Horizontal62,
                                               TheoremId::Combined72};
    return ids;
}

double TheoremReport::term(const std::string& name) const {
    for (const auto& [k, v] : terms)
        if (k == name) return v;
    throw ConfigurationError("report has no term '" + name + "'");
}

Verdict classify(double lhs, double rhs, double tolerance) {
    const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
    const double normalized = (rhs - lhs) / scale;
    if (std::abs(normalized) <= tolerance) return Verdict::Equality;
    return normalized < 0.0 ? Verdict::Violated : Verdict::Strict;
}

std::vector<TheoremReport> check_map_theorem(const MapPointData& d, const CheckOptions& options) {
    const Side sd = side(d.B, options);
    const EqualityDiagnostics diag = equality_diagnostics(d.B, sd.extrema);
    return single(TheoremId::Map32, TheoremId::LemmaMap31, "B", d.B, sd, d.two_tau_H, d.two_tau_R, d.norms_PR, d.c, diag, false,
                  options);
}

std::vector<TheoremReport> check_vertical_theorem(const SubmersionPointData& d, const CheckOptions& options) {
    const Side sd = side(d.T, options);
    const EqualityDiagnostics diag = equality_diagnostics(d.T, sd.extrema);
    return single(TheoremId::Vertical52, TheoremId::LemmaVertical51, "T", d.T, sd, d.two_tau_ker, d.two_tau_V_N1, d.norms_Q, d.c,
                  diag, false, options);
}

std::vector<TheoremReport> check_horizontal_theorem(const SubmersionPointData& d, const CheckOptions& options) {
    const Side sd = side(d.A, options);
    const EqualityDiagnostics diag = equality_diagnostics(d.A, sd.extrema, &d.A, d.bracket_verticality);
    return single(TheoremId::Horizontal62, TheoremId::LemmaHorizontal61, "A", d.A, sd, d.two_tau_perp, d.two_tau_H_N1, d.norms_P,
                  d.c, diag, true, options);
}

std::vector<TheoremReport> check_combined_theorem(const SubmersionPointData& d, std::optional<double> deltaN,
                                                  const CheckOptions& options) {
    if (!deltaN) throw ConfigurationError("the combined theorem needs an explicit deltaN");
    const Side V = side(d.T, options);
    const Side H = side(d.A, options);
    const double s = d.s(), l = d.l();
    const double ss = s * (s - 1.0), ll = l * (l - 1.0), D = ss * ll;
    const double T2 = d.T.squared_norm();
    const double A2 = d.A.squared_norm();
    const double rho_H = d.two_tau_perp / ss;
    const double rho_V = d.two_tau_ker / ll;
    const double lhs = rho_H / ll + rho_V / ss;
    const double tail = (2.0 * *deltaN - T2 + A2) / D;

    const double rho_V_N1 = d.two_tau_V_N1 / ll;
    const double rho_H_N1 = d.two_tau_H_N1 / ss;
    const double lemma_ambient = rho_V_N1 / ss + rho_H_N1 / ll + 2.0 * d.mixed / D;
    const double c = d.c;
    double sum_all = 0.0;
    for (int a = 0; a < 3; ++a) sum_all += d.norms_Q[a] + d.norms_P[a] + 2.0 * d.norms_PV[a];
    const double theorem_ambient =
        c / (4.0 * D) * (l * l + s * s + 2.0 * s * l - l - s) + 3.0 * c / (4.0 * D) * sum_all;

    const EqualityDiagnostics diag = equality_diagnostics(d.T, V.extrema, &d.A, d.bracket_verticality);
    std::vector<std::pair<std::string, double>> terms;
    terms.emplace_back("s", s);
    terms.emplace_back("l", l);
    terms.emplace_back("c", c);
    terms.emplace_back("deltaN", *deltaN);
    append_side(terms, "V_", V);
    append_side(terms, "H_", H);
    terms.emplace_back("rho_H", rho_H);
    terms.emplace_back("rho_V", rho_V);
    terms.emplace_back("rho_V_ambient", rho_V_N1);
    terms.emplace_back("rho_H_ambient", rho_H_N1);
    terms.emplace_back("mixed_scalar", d.mixed);
    terms.emplace_back("T_norm_sq", T2);
    terms.emplace_back("A_norm_sq", A2);
    terms.emplace_back("lemma_ambient", lemma_ambient);
    terms.emplace_back("theorem_ambient", theorem_ambient);
    terms.emplace_back("assembly_gap", std::abs(lemma_ambient - theorem_ambient));

    std::vector<TheoremReport> out;
    for (auto [id, ambient] : {std::pair{TheoremId::Combined72, theorem_ambient},
                               std::pair{TheoremId::LemmaCombined71, lemma_ambient}})
        for (Variant v : {Variant::Delta, Variant::DeltaHat}) {
            const double rhs = pick(V.delta, v) / ss + pick(H.delta, v) / ll + ambient + tail;
            TheoremReport r = make(id, v, lhs, rhs, diag, terms, options.tolerance);
            r.optimizer = {{"T", V.extrema}, {"A", H.extrema}};
            out.push_back(std::move(r));
        }
    return out;
}

const TheoremReport& find_report(const std::vector<TheoremReport>& reports, TheoremId id, Variant variant) {
    for (const auto& r : reports)
        if (r.theorem == id && r.variant == variant) return r;
    throw ConfigurationError(std::string("no report for ") + to_string(id) + "/" + to_string(variant));
}

}  // namespace qcas::inequalities
