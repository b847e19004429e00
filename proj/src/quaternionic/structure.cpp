#include "qcas/quaternionic/structure.hpp"

#include "qcas/errors.hpp"

#include <algorithm>
#include <charconv>

namespace qcas::quaternionic {

QuaternionicStructure::QuaternionicStructure(std::array<Mat, 3> J) : J_(std::move(J)) {
    const auto n = J_[0].rows();
    for (const Mat& m : J_)
        if (m.rows() != n || m.cols() != n) throw StructureError("J matrices must be square and of equal size");
    if (n == 0 || n % 4 != 0)
        throw StructureError("quaternionic structure needs dimension divisible by 4, got " + std::to_string(n));
}

QuaternionicStructure QuaternionicStructure::quat_flat(int m) {
    if (m < 1) throw StructureError("quat-flat needs m >= 1");
    // Left multiplication on (a, b, c, d) ↔ a + b i + c j + d k.
    Mat Li(4, 4), Lj(4, 4);
    Li << 0, -1, 0, 0,
          1, 0, 0, 0,
          0, 0, 0, -1,
          0, 0, 1, 0;
    Lj << 0, 0, -1, 0,
          0, 0, 0, 1,
          1, 0, 0, 0,
          0, -1, 0, 0;
    const Mat Lk = Li * Lj;
    const int n = 4 * m;
    std::array<Mat, 3> J{Mat::Zero(n, n), Mat::Zero(n, n), Mat::Zero(n, n)};
    for (int b = 0; b < m; ++b) {
        J[0].block(4 * b, 4 * b, 4, 4) = Li;
        J[1].block(4 * b, 4 * b, 4, 4) = Lj;
        J[2].block(4 * b, 4 * b, 4, 4) = Lk;
    }
    return QuaternionicStructure(std::move(J));
}

QuaternionicStructure QuaternionicStructure::builtin(const std::string& name) {
    constexpr std::string_view prefix = "quat-flat:";
    if (name.rfind(prefix, 0) == 0) {
        int m = 0;
        const char* first = name.data() + prefix.size();
        const char* last = name.data() + name.size();
        auto [ptr, ec] = std::from_chars(first, last, m);
        if (ec == std::errc() && ptr == last) return quat_flat(m);
    }
    throw StructureError("unknown builtin structure '" + name + "'");
}

double StructureReport::worst() const {
    double w = std::max(product_defect, anticommute_defect);
    for (double v : square_defect) w = std::max(w, v);
    for (double v : hermitian_defect) w = std::max(w, v);
    return w;
}

std::string StructureReport::first_failure(double tol) const {
    for (int a = 0; a < 3; ++a)
        if (!(square_defect[a] < tol)) return "J" + std::to_string(a + 1) + "^2 = -I";
    if (!(product_defect < tol)) return "J1 J2 = J3";
    if (!(anticommute_defect < tol)) return "J2 J1 = -J3";
    for (int a = 0; a < 3; ++a)
        if (!(hermitian_defect[a] < tol)) return "g(J" + std::to_string(a + 1) + "X, J" + std::to_string(a + 1) + "Y) = g(X, Y)";
    return {};
}

StructureReport check_quaternionic_structure(const QuaternionicStructure& s, const Mat& g) {
    if (g.rows() != s.dim() || g.cols() != s.dim()) throw DimensionError("metric size does not match structure");
    const int n = s.dim();
    const Mat I = Mat::Identity(n, n);
    StructureReport r;
    for (int a = 0; a < 3; ++a) {
        r.square_defect[a] = max_abs(s.J(a) * s.J(a) + I);
        r.hermitian_defect[a] = max_abs(s.J(a).transpose() * g * s.J(a) - g);
    }
    r.product_defect = max_abs(s.J(0) * s.J(1) - s.J(2));
    r.anticommute_defect = max_abs(s.J(1) * s.J(0) + s.J(2));
    return r;
}

void require_quaternionic_structure(const QuaternionicStructure& s, const Mat& g, double tol) {
    const StructureReport r = check_quaternionic_structure(s, g);
    if (!r.pass(tol)) throw StructureError("quaternionic structure violates " + r.first_failure(tol));
}

}  // namespace qcas::quaternionic
