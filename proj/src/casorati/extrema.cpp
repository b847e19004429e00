#include "qcas/casorati/extrema.hpp"

#include "qcas/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <random>

#include <Eigen/Eigenvalues>

namespace qcas::casorati {

namespace {

constexpr std::array<int, 25> kPrimes = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                         43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

double radical_inverse(int index, int base) {
    double result = 0.0;
    double f = 1.0 / base;
    while (index > 0) {
        result += f * (index % base);
        index /= base;
        f /= base;
    }
    return result;
}

/// Coordinate axes first, then normalized Halton points of the cube [−1, 1]ⁿ.
std::vector<Vec> start_directions(int n, int count, std::uint64_t seed) {
    std::vector<Vec> out;
    for (int i = 0; i < n && static_cast<int>(out.size()) < count; ++i) out.push_back(Vec::Unit(n, i));
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uniform(-1.0, 1.0);
    for (int index = 1; static_cast<int>(out.size()) < count; ++index) {
        Vec v(n);
        for (int d = 0; d < n; ++d)
            v(d) = d < static_cast<int>(kPrimes.size()) ? 2.0 * radical_inverse(index, kPrimes[static_cast<std::size_t>(d)]) - 1.0
                                                        : uniform(rng);
        if (v.norm() < 1e-3) continue;
        out.push_back(v.normalized());
    }
    return out;
}

double sign_distance(const Vec& a, const Vec& b) { return std::min((a - b).norm(), (a + b).norm()); }

struct Run {
    Vec u;
    double value = 0.0;
    double gradient_norm = 0.0;
    int iterations = 0;
    bool converged = false;
};

/// Projected gradient descent of sign·f on the unit sphere with Barzilai–Borwein
/// trial steps and Armijo backtracking.
Run descend(const CasoratiInput& input, Vec u, double sign, double tolerance, int max_iterations) {
    Vec grad;
    double f = sign * hyperplane_objective(input, u, &grad);
    grad *= sign;
    Vec tangent = grad - u.dot(grad) * u;
    double step = 1.0 / std::max(1.0, std::abs(f));
    Vec prev_u, prev_tangent;
    Run run;
    for (int it = 0; it < max_iterations; ++it) {
        run.iterations = it;
        const double gnorm = tangent.norm();
        if (gnorm < tolerance) {
            run.converged = true;
            break;
        }
        if (it > 0) {
            const Vec s = u - prev_u;
            const Vec y = tangent - prev_tangent;
            const double sy = std::abs(s.dot(y));
            if (sy > 0.0) step = s.squaredNorm() / sy;
        }
        step = std::clamp(step, 1e-12, 1e6);
        Vec next;
        double f_next = 0.0;
        bool accepted = false;
        for (int bt = 0; bt < 60; ++bt) {
            next = (u - step * tangent).normalized();
            f_next = sign * hyperplane_objective(input, next);
            if (f_next <= f - 1e-4 * step * gnorm * gnorm) {
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if (!accepted) {
            // No representable decrease remains; the point is stationary to rounding.
            run.converged = gnorm < 1e3 * tolerance;
            break;
        }
        prev_u = u;
        prev_tangent = tangent;
        u = next;
        f = sign * hyperplane_objective(input, u, &grad);
        grad *= sign;
        tangent = grad - u.dot(grad) * u;
        run.iterations = it + 1;
    }
    run.u = u;
    run.value = sign * f;
    run.gradient_norm = tangent.norm();
    if (!run.converged && run.gradient_norm < tolerance) run.converged = true;
    return run;
}

/// Euclidean Hessian of the objective.
Mat objective_hessian(const CasoratiInput& input, const Vec& u) {
    const int n = input.n_dist;
    Mat H = Mat::Zero(n, n);
    for (const Mat& M : input.slices) {
        const Mat Ms = 0.5 * (M + M.transpose());
        const Vec a = Ms * u;
        const double q = u.dot(a);
        H += -2.0 * (M.transpose() * M + M * M.transpose()) + 8.0 * a * a.transpose() + 4.0 * q * Ms;
    }
    return H / (n - 1);
}

/// Riemannian Newton polish of sign·f on the sphere, restricted to the
/// positive-curvature eigendirections of the Riemannian Hessian. Steps are only
/// taken when they do not increase the objective beyond rounding.
Run polish(const CasoratiInput& input, Run run, double sign, double tolerance, double scale) {
    const int n = input.n_dist;
    Vec u = run.u;
    Vec grad;
    double f = sign * hyperplane_objective(input, u, &grad);
    grad *= sign;
    for (int it = 0; it < 30; ++it) {
        const Mat P = Mat::Identity(n, n) - u * u.transpose();
        const Vec g = P * grad;
        if (g.norm() < tolerance) break;
        const Mat H = P * (sign * objective_hessian(input, u)) * P - u.dot(grad) * P;
        const Eigen::SelfAdjointEigenSolver<Mat> eig(0.5 * (H + H.transpose()));
        const double floor = 1e-10 * std::max(1.0, eig.eigenvalues().cwiseAbs().maxCoeff());
        Vec d = Vec::Zero(n);
        for (int i = 0; i < n; ++i) {
            const Vec v = eig.eigenvectors().col(i);
            if (eig.eigenvalues()(i) > floor && std::abs(v.dot(u)) < 0.5) d -= (v.dot(g) / eig.eigenvalues()(i)) * v;
        }
        const Vec next = (u + d).normalized();
        Vec next_grad;
        const double f_next = sign * hyperplane_objective(input, next, &next_grad);
        next_grad *= sign;
        const double g_next = (next_grad - next.dot(next_grad) * next).norm();
        if (f_next > f + 1e-14 * scale || g_next >= g.norm()) break;
        u = next;
        f = f_next;
        grad = next_grad;
        ++run.iterations;
    }
    run.u = u;
    run.value = sign * f;
    run.gradient_norm = (grad - u.dot(grad) * u).norm();
    if (run.gradient_norm < tolerance) run.converged = true;
    return run;
}

Run optimize(const CasoratiInput& input, const Vec& u0, double sign, double tolerance, double scale,
             int max_iterations) {
    const Run coarse = descend(input, u0, sign, std::max(tolerance, 1e-6 * scale), max_iterations);
    return polish(input, coarse, sign, tolerance, scale);
}

struct Best {
    Run run;
    int index = -1;
    bool degenerate = false;
};

Best select(const std::vector<Run>& runs, double sign, double scale) {
    Best best;
    for (std::size_t i = 0; i < runs.size(); ++i) {
        if (!runs[i].converged) continue;
        if (best.index < 0 || sign * runs[i].value < sign * best.run.value) {
            best.run = runs[i];
            best.index = static_cast<int>(i);
        }
    }
    if (best.index < 0) return best;
    for (const Run& r : runs)
        if (r.converged && std::abs(r.value - best.run.value) < 1e-10 * scale && sign_distance(r.u, best.run.u) > 1e-3)
            best.degenerate = true;
    return best;
}

}  // namespace

double hyperplane_objective(const CasoratiInput& input, const Vec& u, Vec* gradient) {
    const int n = input.n_dist;
    double sum = 0.0;
    if (gradient) *gradient = Vec::Zero(n);
    for (const Mat& M : input.slices) {
        const Vec Mu = M * u;
        const Vec Mtu = M.transpose() * u;
        const double q = u.dot(Mu);
        sum += M.squaredNorm() - Mu.squaredNorm() - Mtu.squaredNorm() + q * q;
        if (gradient) *gradient += -2.0 * (M.transpose() * Mu) - 2.0 * (M * Mtu) + 2.0 * q * (Mu + Mtu);
    }
    if (gradient) *gradient /= (n - 1);
    return sum / (n - 1);
}

HyperplaneExtrema hyperplane_extrema(const CasoratiInput& input, const ExtremaOptions& options) {
    const int n = input.n_dist;
    if (n < 3) throw DimensionError("hyperplane extremization needs n_dist >= 3");
    const double scale = std::max(1.0, input.squared_norm() / n);
    const double tol = options.gradient_tolerance * scale;

    const std::vector<Vec> starts = start_directions(n, std::max(options.starts, 1), options.seed);
    std::vector<Run> minima, maxima;
    for (const Vec& u0 : starts) {
        minima.push_back(optimize(input, u0, 1.0, tol, scale, options.max_iterations));
        maxima.push_back(optimize(input, u0, -1.0, tol, scale, options.max_iterations));
    }
    Best lo = select(minima, 1.0, scale);
    Best hi = select(maxima, -1.0, scale);
    if (lo.index < 0 || hi.index < 0) {
        double best = std::numeric_limits<double>::infinity();
        for (const Run& r : minima) best = std::min(best, r.value);
        throw OptimizationError("hyperplane extremization did not converge from any start", best);
    }

    // Tighten the winners well below the reporting tolerance so the returned
    // normals are accurate enough for frame rotations downstream.
    for (auto [best, sign] : {std::pair<Best*, double>{&lo, 1.0}, std::pair<Best*, double>{&hi, -1.0}}) {
        const Run refined = polish(input, best->run, sign, 1e-15 * scale, scale);
        if (sign * refined.value <= sign * best->run.value) {
            best->run.u = refined.u;
            best->run.value = refined.value;
            best->run.gradient_norm = refined.gradient_norm;
            best->run.iterations = refined.iterations;
        }
    }

    HyperplaneExtrema out;
    if (options.certify && n <= 5) {
        std::mt19937_64 rng(options.seed ^ 0x9e3779b97f4a7c15ULL);
        std::normal_distribution<double> normal;
        double sample_min = std::numeric_limits<double>::infinity();
        double sample_max = -sample_min;
        Vec arg_min, arg_max;
        for (int k = 0; k < options.certification_samples; ++k) {
            Vec v(n);
            for (int d = 0; d < n; ++d) v(d) = normal(rng);
            const double norm = v.norm();
            if (norm < 1e-12) continue;
            v /= norm;
            const double f = hyperplane_objective(input, v);
            if (f < sample_min) sample_min = f, arg_min = v;
            if (f > sample_max) sample_max = f, arg_max = v;
        }
        // Polish the best samples so the comparison is not limited by sampling resolution.
        const Run pmin = optimize(input, arg_min, 1.0, tol, scale, options.max_iterations);
        const Run pmax = optimize(input, arg_max, -1.0, tol, scale, options.max_iterations);
        out.certified = true;
        out.certified_gap = std::max({std::abs(pmin.value - lo.run.value), std::abs(pmax.value - hi.run.value),
                                      std::max(0.0, lo.run.value - sample_min), std::max(0.0, sample_max - hi.run.value)});
        if (pmin.converged && pmin.value < lo.run.value) {
            lo.run = pmin;
            lo.index = static_cast<int>(starts.size());
        }
        if (pmax.converged && pmax.value > hi.run.value) {
            hi.run = pmax;
            hi.index = static_cast<int>(starts.size());
        }
    }

    out.inf_CL = lo.run.value;
    out.sup_CL = hi.run.value;
    out.argmin_normal = lo.run.u;
    out.argmax_normal = hi.run.u;
    out.min_audit = {lo.index, lo.run.iterations, lo.run.gradient_norm, lo.degenerate};
    out.max_audit = {hi.index, hi.run.iterations, hi.run.gradient_norm, hi.degenerate};
    return out;
}

DeltaCasorati delta_casorati(double C, const HyperplaneExtrema& extrema, int n_dist) {
    if (n_dist < 3) throw DimensionError("delta-Casorati curvature needs n_dist >= 3");
    const double n = n_dist;
    return {0.5 * C + (n + 1.0) / (2.0 * n) * extrema.inf_CL, 2.0 * C - (2.0 * n - 1.0) / (2.0 * n) * extrema.sup_CL};
}

}  // namespace qcas::casorati
