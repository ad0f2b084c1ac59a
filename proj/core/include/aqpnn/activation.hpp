#pragma once

#include <vector>

#include "aqpnn/algebra.hpp"

namespace aqpnn {

inline constexpr double kSolveEps = 1e-9;
inline constexpr double kDedupEps = 1e-6;
inline constexpr double kZeroEps = 1e-9;

// Rotation-like operator [[cos t, -sin t],[sin p, cos p]] together with the
// angles it was built from and the target it was solved against.
struct ActivationOperator {
    double theta = 0.0; // radians, in (-pi, pi]
    double phi = 0.0;   // radians, in (-pi, pi]
    Mat2 matrix;
    Qubit target;
};

struct SolveResult {
    std::vector<ActivationOperator> candidates; // 1-4 entries, deterministic order
    Qubit source;                               // the weighted sum solved against
};

Mat2 matrix_from_angles(double theta, double phi);

// Wrap into (-pi, pi].
double normalize_angle(double a);

// Solve  M(theta, phi) * weighted_sum = target  for all real angle branches.
// Branch order: theta "+acos" before "-acos", phi "asin" before "pi-asin";
// branches coinciding within 1e-9 are merged.
// Throws ZeroWeightedSum when |weighted_sum| <= kZeroEps and NoRealSolution
// when either target amplitude exceeds the weighted-sum norm beyond tolerance.
SolveResult solve_activation(const Qubit& weighted_sum, const Qubit& target);

// Prefer an operator already in `existing` that matches a candidate: first one
// matching in both matrix and target, then one matching in matrix alone
// (absorbs the F2=F1 style merges across classes). Otherwise the first
// candidate.
ActivationOperator select_operator(const SolveResult& result,
                                   const std::vector<ActivationOperator>& existing);

// F * F^T; equals [[1, s],[s, 1]] with s = sin(phi - theta).
Mat2 unitarity_defect(const ActivationOperator& op);

} // namespace aqpnn
