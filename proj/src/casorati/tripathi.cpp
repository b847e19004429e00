#include "qcas/casorati/tripathi.hpp"

#include "qcas/errors.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include <algorithm>
#include <cmath>

namespace qcas::casorati {

double TripathiInstance::proviso_lambda2(int n, double lambda1) { return (n - 1.0) / (lambda1 - n + 2.0); }

TripathiInstance TripathiInstance::with_proviso(int n, double lambda1, double k) {
    return {n, k, lambda1, proviso_lambda2(n, lambda1)};
}

double TripathiInstance::proviso_defect() const {
    const double target = proviso_lambda2(n, lambda1);
    return std::abs(lambda2 - target) / std::max(1.0, std::abs(target));
}

Mat TripathiInstance::quadratic_form() const {
    Mat Q = Mat::Constant(n, n, -1.0);
    for (int i = 0; i < n - 1; ++i) Q(i, i) = lambda1;
    Q(n - 1, n - 1) = lambda2;
    return Q;
}

double TripathiInstance::objective(const Vec& t) const {
    double f = lambda2 * t(n - 1) * t(n - 1);
    for (int i = 0; i < n - 1; ++i) f += lambda1 * t(i) * t(i);
    const double sum = t.sum();
    f -= sum * sum - t.squaredNorm();
    return f;
}

TripathiSolution tripathi_minimize(const TripathiInstance& inst) {
    if (inst.n < 3) throw DimensionError("constrained extremum problem needs n >= 3");
    if (!(inst.lambda1 > 0.0) || !(inst.lambda2 > 0.0)) throw DomainError("lambda1 and lambda2 must be positive");
    if (inst.proviso_defect() > 1e-12)
        throw ProvisoError("lambda2 differs from (n-1)/(lambda1-n+2); the closed form is not guaranteed");
    TripathiSolution sol;
    sol.t = Vec::Constant(inst.n, inst.k / (inst.lambda1 + 1.0));
    sol.tn_forms = {inst.k / (inst.lambda2 + 1.0), inst.k * (inst.n - 1.0) / ((inst.lambda1 + 1.0) * inst.lambda2),
                    inst.k * (inst.lambda1 - inst.n + 2.0) / (inst.lambda1 + 1.0)};
    sol.t(inst.n - 1) = sol.tn_forms[0];
    sol.value = inst.objective(sol.t);
    return sol;
}

Vec minimize_on_hyperplane(const Mat& Q, double k) {
    const Eigen::Index n = Q.rows();
    Mat K = Mat::Zero(n + 1, n + 1);
    K.topLeftCorner(n, n) = 2.0 * Q;
    K.block(0, n, n, 1).setOnes();
    K.block(n, 0, 1, n).setOnes();
    Vec rhs = Vec::Zero(n + 1);
    rhs(n) = k;
    Eigen::FullPivLU<Mat> lu(K);
    if (!lu.isInvertible()) throw DegeneracyError("KKT system is singular");
    // Positive definiteness on the hyperplane: reduced Hessian on a basis of {Σt = 0}.
    Mat Z = Mat::Zero(n, n - 1);
    for (Eigen::Index i = 0; i < n - 1; ++i) {
        Z(i, i) = 1.0;
        Z(n - 1, i) = -1.0;
    }
    const Mat reduced = Z.transpose() * Q * Z;
    Eigen::SelfAdjointEigenSolver<Mat> eig(reduced);
    if (eig.eigenvalues().minCoeff() <= 0.0) throw DegeneracyError("quadratic form is not convex on the hyperplane");
    return lu.solve(rhs).head(n);
}

}  // namespace qcas::casorati
