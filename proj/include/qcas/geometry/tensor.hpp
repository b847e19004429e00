#pragma once

#include "qcas/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace qcas::geometry {

/// Dense n×n×n array, index order (a, b, c) with the last index fastest.
class Tensor3 {
public:
    Tensor3() = default;
    explicit Tensor3(int n) : n_(n), data_(static_cast<std::size_t>(n) * n * n, 0.0) {}

    int dim() const { return n_; }
    double& operator()(int a, int b, int c) { return data_[index(a, b, c)]; }
    double operator()(int a, int b, int c) const { return data_[index(a, b, c)]; }

    /// Vector with components T(·, x, y) contracted on the last two slots.
    Vec contract(const Vec& x, const Vec& y) const {
        Vec out = Vec::Zero(n_);
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b)
                for (int c = 0; c < n_; ++c) out(a) += (*this)(a, b, c) * x(b) * y(c);
        return out;
    }

private:
    std::size_t index(int a, int b, int c) const {
        return (static_cast<std::size_t>(a) * n_ + b) * n_ + c;
    }

    int n_ = 0;
    std::vector<double> data_;
};

/// Dense n⁴ array used for fully covariant curvature components.
class Tensor4 {
public:
    Tensor4() = default;
    explicit Tensor4(int n) : n_(n), data_(static_cast<std::size_t>(n) * n * n * n, 0.0) {}

    int dim() const { return n_; }
    double& operator()(int a, int b, int c, int d) { return data_[index(a, b, c, d)]; }
    double operator()(int a, int b, int c, int d) const { return data_[index(a, b, c, d)]; }

    double contract(const Vec& x, const Vec& y, const Vec& z, const Vec& w) const {
        double sum = 0.0;
        for (int a = 0; a < n_; ++a) {
            if (x(a) == 0.0) continue;
            for (int b = 0; b < n_; ++b) {
                if (y(b) == 0.0) continue;
                const double xy = x(a) * y(b);
                for (int c = 0; c < n_; ++c) {
                    if (z(c) == 0.0) continue;
                    double inner = 0.0;
                    for (int d = 0; d < n_; ++d) inner += (*this)(a, b, c, d) * w(d);
                    sum += xy * z(c) * inner;
                }
            }
        }
        return sum;
    }

    double max_abs() const {
        double m = 0.0;
        for (double v : data_) m = std::max(m, std::abs(v));
        return m;
    }

private:
    std::size_t index(int a, int b, int c, int d) const {
        return ((static_cast<std::size_t>(a) * n_ + b) * n_ + c) * n_ + d;
    }

    int n_ = 0;
    std::vector<double> data_;
};

}  // namespace qcas::geometry
