#include "aqpnn/activation.hpp"

#include <algorithm>
#include <cmath>

namespace aqpnn {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kAngleMergeEps = 1e-9;

double clamp_unit(double x) { return std::clamp(x, -1.0, 1.0); }

bool angles_coincide(double a, double b) {
    return std::abs(std::remainder(a - b, 2.0 * kPi)) <= kAngleMergeEps;
}

void push_unique_angle(std::vector<double>& v, double a) {
    for (double b : v)
        if (angles_coincide(a, b)) return;
    v.push_back(a);
}

} // namespace

double normalize_angle(double a) {
    double r = std::remainder(a, 2.0 * kPi);
    if (r <= -kPi) r += 2.0 * kPi; // remainder gives [-pi, pi]; map -pi to +pi
    return r;
}

Mat2 matrix_from_angles(double theta, double phi) {
    return {{{{std::cos(theta), -std::sin(theta)},
              {std::sin(phi), std::cos(phi)}}}};
}

SolveResult solve_activation(const Qubit& weighted_sum, const Qubit& target) {
    const double alpha = weighted_sum.alpha;
    const double beta = weighted_sum.beta;
    const double r = weighted_sum.norm();

    if (r <= kZeroEps) throw ZeroWeightedSum("weighted sum has (near) zero norm");
    if (std::abs(target.alpha) / r > 1.0 + kSolveEps ||
        std::abs(target.beta) / r > 1.0 + kSolveEps)
        throw NoRealSolution("target amplitude exceeds weighted-sum norm");

    // Row 1: alpha*cos(theta) - beta*sin(theta) = R*cos(theta - psi1) = alpha_d
    // Row 2: alpha*sin(phi)  + beta*cos(phi)   = R*sin(phi + psi2)   = beta_d
    const double psi1 = std::atan2(-beta, alpha);
    const double psi2 = std::atan2(beta, alpha);
    const double ac = std::acos(clamp_unit(target.alpha / r));
    const double as = std::asin(clamp_unit(target.beta / r));

    std::vector<double> thetas;
    push_unique_angle(thetas, normalize_angle(psi1 + ac));
    push_unique_angle(thetas, normalize_angle(psi1 - ac));

    std::vector<double> phis;
    push_unique_angle(phis, normalize_angle(as - psi2));
    push_unique_angle(phis, normalize_angle(kPi - as - psi2));

    SolveResult out;
    out.source = weighted_sum;
    for (double t : thetas)
        for (double p : phis)
            out.candidates.push_back({t, p, matrix_from_angles(t, p), target});
    return out;
}

ActivationOperator select_operator(const SolveResult& result,
                                   const std::vector<ActivationOperator>& existing) {
    // Matrix + target match first, then matrix-only (merges across classes).
    for (const auto& cand : result.candidates)
        for (const auto& op : existing)
            if (approx_eq(cand.matrix, op.matrix, kDedupEps) &&
                approx_eq(cand.target, op.target, kDedupEps))
                return op;
    for (const auto& cand : result.candidates)
        for (const auto& op : existing)
            if (approx_eq(cand.matrix, op.matrix, kDedupEps)) return op;
    return result.candidates.front();
}

Mat2 unitarity_defect(const ActivationOperator& op) {
    return op.matrix * transpose(op.matrix);
}

} // namespace aqpnn
