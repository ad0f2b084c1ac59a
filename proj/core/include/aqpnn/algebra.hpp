#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "aqpnn/errors.hpp"

namespace aqpnn {

// Normalization tolerance for input/target qubits.
inline constexpr double kNormEps = 1e-9;

// Two real amplitudes [alpha, beta]. Inputs and targets are normalized;
// weighted sums are generally not.
struct Qubit {
    double alpha = 0.0;
    double beta = 0.0;

    double norm_sq() const { return alpha * alpha + beta * beta; }
    double norm() const { return std::sqrt(norm_sq()); }
    bool is_normalized(double eps = kNormEps) const {
        return std::abs(norm_sq() - 1.0) <= eps;
    }
};

inline Qubit operator+(const Qubit& a, const Qubit& b) { return {a.alpha + b.alpha, a.beta + b.beta}; }
inline Qubit operator-(const Qubit& a, const Qubit& b) { return {a.alpha - b.alpha, a.beta - b.beta}; }
inline Qubit operator*(double s, const Qubit& q) { return {s * q.alpha, s * q.beta}; }

// 2x2 real matrix, row-major.
struct Mat2 {
    std::array<std::array<double, 2>, 2> m{{{0.0, 0.0}, {0.0, 0.0}}};

    static Mat2 identity() { return {{{{1.0, 0.0}, {0.0, 1.0}}}}; }

    double& operator()(std::size_t r, std::size_t c) { return m[r][c]; }
    double operator()(std::size_t r, std::size_t c) const { return m[r][c]; }
};

inline Mat2 operator+(const Mat2& a, const Mat2& b) {
    Mat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r(i, j) = a(i, j) + b(i, j);
    return r;
}

inline Mat2 operator*(double s, const Mat2& a) {
    Mat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r(i, j) = s * a(i, j);
    return r;
}

inline Mat2 operator*(const Mat2& a, const Mat2& b) {
    Mat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
    return r;
}

inline Mat2 transpose(const Mat2& a) {
    return {{{{a(0, 0), a(1, 0)}, {a(0, 1), a(1, 1)}}}};
}

inline Qubit mat_apply(const Mat2& m, const Qubit& q) {
    return {m(0, 0) * q.alpha + m(0, 1) * q.beta,
            m(1, 0) * q.alpha + m(1, 1) * q.beta};
}

// |u><v|: result[i][j] = u[i] * v[j].
inline Mat2 outer_product(const Qubit& u, const Qubit& v) {
    return {{{{u.alpha * v.alpha, u.alpha * v.beta},
              {u.beta * v.alpha, u.beta * v.beta}}}};
}

// Elementwise product of equal-length vectors.
inline std::vector<double> hadamard_product(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size())
        throw LengthMismatch("hadamard_product: lengths " + std::to_string(a.size()) +
                             " vs " + std::to_string(b.size()));
    std::vector<double> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
    return out;
}

inline Mat2 hadamard_product(const Mat2& a, const Mat2& b) {
    Mat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r(i, j) = a(i, j) * b(i, j);
    return r;
}

inline bool approx_eq(const Qubit& a, const Qubit& b, double eps) {
    return std::abs(a.alpha - b.alpha) <= eps && std::abs(a.beta - b.beta) <= eps;
}

inline bool approx_eq(const Mat2& a, const Mat2& b, double eps) {
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            if (std::abs(a(i, j) - b(i, j)) > eps) return false;
    return true;
}

} // namespace aqpnn
