#pragma once

#include "qcas/casorati/extrema.hpp"
#include "qcas/inequalities/diagnostics.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qcas::inequalities {

enum class TheoremId {
    Map32,
    Vertical52,
    Horizontal62,
    Combined72,
    LemmaMap31,
    LemmaVertical51,
    LemmaHorizontal61,
    LemmaCombined71,
};

enum class Variant { Delta, DeltaHat };
enum class Verdict { Equality, Strict, Violated };

const char* to_string(TheoremId id);
const char* to_string(Variant v);
const char* to_string(Verdict v);
/// Accepts the report names ("map_3_2", "lemma_vertical_5_1", …).
std::optional<TheoremId> parse_theorem_id(const std::string& name);
const std::vector<TheoremId>& all_theorems();

struct TheoremReport {
    TheoremId theorem = TheoremId::Map32;
    Variant variant = Variant::Delta;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;  ///< rhs − lhs
    Verdict verdict = Verdict::Strict;
    EqualityDiagnostics diagnostics;
    /// Named intermediate quantities in a fixed order.
    std::vector<std::pair<std::string, double>> terms;
    /// Hyperplane extrema per distribution tensor ("B", "T", "A").
    std::vector<std::pair<std::string, casorati::HyperplaneExtrema>> optimizer;

    /// Throws ConfigurationError for an unknown name.
    double term(const std::string& name) const;
};

/// Equality iff |slack| ≤ tol·max(1, |lhs|, |rhs|); violated iff slack is below −tol on that scale.
Verdict classify(double lhs, double rhs, double tolerance);

struct CheckOptions {
    double tolerance = 1e-8;
    casorati::ExtremaOptions extrema;
};

/// Quantities of a Riemannian map at one point, in split frames.
struct MapPointData {
    casorati::CasoratiInput B;  ///< over the horizontal space, slices over range⊥
    double two_tau_H = 0.0;     ///< Σ R¹(h_i,h_j,h_j,h_i)
    double two_tau_R = 0.0;     ///< Σ R²(F∗h_i,F∗h_j,F∗h_j,F∗h_i)
    std::array<double, 3> norms_PR{};
    double c = 0.0;
    double space_form_mismatch = 0.0;  ///< max deviation of the target curvature from the space-form oracle
};

/// Quantities of a Riemannian submersion at one point, in split frames.
struct SubmersionPointData {
    casorati::CasoratiInput T;  ///< over the vertical space, slices over horizontal
    casorati::CasoratiInput A;  ///< over the horizontal space, slices over vertical
    double two_tau_ker = 0.0;   ///< fibers, intrinsic
    double two_tau_perp = 0.0;  ///< horizontal space, R^{(ker F∗)⊥}
    double two_tau_V_N1 = 0.0;
    double two_tau_H_N1 = 0.0;
    double mixed = 0.0;         ///< Σ R¹(h_i, v_j, v_j, h_i)
    std::array<double, 3> norms_P{};
    std::array<double, 3> norms_Q{};
    std::array<double, 3> norms_PV{};
    double c = 0.0;
    std::optional<double> bracket_verticality;
    double space_form_mismatch = 0.0;  ///< max deviation of the source curvature from the space-form oracle

    int s() const { return A.n_dist; }
    int l() const { return T.n_dist; }
};

/// Each checker returns the theorem and its lemma, δ and δ̂ variants, in the
/// order theorem/δ, theorem/δ̂, lemma/δ, lemma/δ̂.
std::vector<TheoremReport> check_map_theorem(const MapPointData& data, const CheckOptions& options = {});
std::vector<TheoremReport> check_vertical_theorem(const SubmersionPointData& data, const CheckOptions& options = {});
std::vector<TheoremReport> check_horizontal_theorem(const SubmersionPointData& data, const CheckOptions& options = {});
/// Throws ConfigurationError when deltaN is missing.
std::vector<TheoremReport> check_combined_theorem(const SubmersionPointData& data, std::optional<double> deltaN,
                                                  const CheckOptions& options = {});

/// Throws ConfigurationError if absent.
const TheoremReport& find_report(const std::vector<TheoremReport>& reports, TheoremId id, Variant variant);

}  // namespace qcas::inequalities
