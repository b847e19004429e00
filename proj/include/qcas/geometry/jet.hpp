#pragma once

#include "qcas/linalg.hpp"

#include <cmath>

namespace qcas::geometry {

/// Second-order truncated Taylor carrier: value, gradient and Hessian with
/// respect to the n chart coordinates.
///
/// Arithmetic propagates all three exactly (up to rounding), so evaluating a
/// closed-form field on Jet2 arguments yields its analytic first and second
/// partials at the point.
struct Jet2 {
    double value = 0.0;
    Vec grad;
    Mat hess;

    Jet2() = default;

    /// Constant in n variables.
    Jet2(double v, Eigen::Index n) : value(v), grad(Vec::Zero(n)), hess(Mat::Zero(n, n)) {}

    /// Seed for coordinate `index` at value `v`.
    static Jet2 variable(double v, Eigen::Index index, Eigen::Index n) {
        Jet2 j(v, n);
        j.grad(index) = 1.0;
        return j;
    }

    Eigen::Index dim() const { return grad.size(); }

    Jet2& operator+=(const Jet2& o) {
        value += o.value;
        grad += o.grad;
        hess += o.hess;
        return *this;
    }
    Jet2& operator-=(const Jet2& o) {
        value -= o.value;
        grad -= o.grad;
        hess -= o.hess;
        return *this;
    }
    Jet2& operator*=(const Jet2& o) {
        hess = value * o.hess + o.value * hess + grad * o.grad.transpose() + o.grad * grad.transpose();
        grad = value * o.grad + o.value * grad;
        value *= o.value;
        return *this;
    }
    Jet2& operator*=(double s) {
        value *= s;
        grad *= s;
        hess *= s;
        return *this;
    }
};

/// Applies a scalar function with known first and second derivative at u.value.
inline Jet2 chain(const Jet2& u, double f, double df, double d2f) {
    Jet2 r;
    r.value = f;
    r.grad = df * u.grad;
    r.hess = df * u.hess;
    if (d2f != 0.0) r.hess += d2f * (u.grad * u.grad.transpose());
    return r;
}

inline Jet2 operator+(Jet2 a, const Jet2& b) { return a += b; }
inline Jet2 operator-(Jet2 a, const Jet2& b) { return a -= b; }
inline Jet2 operator*(Jet2 a, const Jet2& b) { return a *= b; }
inline Jet2 operator*(Jet2 a, double s) { return a *= s; }
inline Jet2 operator*(double s, Jet2 a) { return a *= s; }
inline Jet2 operator-(Jet2 a) { return a *= -1.0; }

inline Jet2 reciprocal(const Jet2& u) {
    const double v = u.value;
    return chain(u, 1.0 / v, -1.0 / (v * v), 2.0 / (v * v * v));
}

inline Jet2 operator/(const Jet2& a, const Jet2& b) { return a * reciprocal(b); }

inline Jet2 exp(const Jet2& u) {
    const double e = std::exp(u.value);
    return chain(u, e, e, e);
}

inline Jet2 log(const Jet2& u) {
    const double v = u.value;
    return chain(u, std::log(v), 1.0 / v, -1.0 / (v * v));
}

inline Jet2 sin(const Jet2& u) {
    const double s = std::sin(u.value);
    return chain(u, s, std::cos(u.value), -s);
}

inline Jet2 cos(const Jet2& u) {
    const double c = std::cos(u.value);
    return chain(u, c, -std::sin(u.value), -c);
}

inline Jet2 sqrt(const Jet2& u) {
    const double r = std::sqrt(u.value);
    return chain(u, r, 0.5 / r, -0.25 / (r * u.value));
}

/// u^p for a constant exponent. Integer exponents are exact at u = 0.
inline Jet2 pow(const Jet2& u, double p) {
    if (p == 0.0) return Jet2(1.0, u.dim());
    if (p == 1.0) return u;
    const double v = u.value;
    const double f = std::pow(v, p);
    const double df = p * std::pow(v, p - 1.0);
    const double d2f = (p == 2.0) ? 2.0 : p * (p - 1.0) * std::pow(v, p - 2.0);
    return chain(u, f, df, d2f);
}

/// Value-only helpers so templated evaluators can treat double and Jet2 alike.
inline double value_of(double x) { return x; }
inline double value_of(const Jet2& x) { return x.value; }

}  // namespace qcas::geometry
