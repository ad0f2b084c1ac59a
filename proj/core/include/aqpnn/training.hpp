#pragma once

#include <cstdint>
#include <vector>

#include "aqpnn/activation.hpp"
#include "aqpnn/algebra.hpp"

namespace aqpnn {

struct TrainingPattern {
    std::vector<Qubit> inputs; // n normalized qubits
    Qubit target;              // normalized class qubit
};

enum class WeightInit { Identity, RandomUniform, Explicit };

struct TrainConfig {
    double gamma = 0.1; // learning rate, in (0,1)
    int max_epochs = 1000;
    double eps_collide = 1e-6;
    double eps_zero = 1e-9;
    std::uint64_t seed = 0;
    WeightInit init = WeightInit::Identity;
    double init_lo = -1.0;
    double init_hi = 1.0;
    std::vector<Mat2> init_weights; // used when init == Explicit
};

struct Model {
    std::size_t n = 0;
    std::vector<Mat2> weights;
    std::vector<ActivationOperator> operators; // deduplicated
    std::vector<int> pattern_ops;              // pattern index -> operator index
    int epochs_used = 0;
    TrainConfig config;
};

Qubit compute_weighted_sum(const std::vector<Mat2>& weights, const std::vector<Qubit>& inputs);

// w_i <- w_i + gamma * |d - y><x_i| for every input slot; inputs untouched.
std::vector<Mat2> update_weights(const std::vector<Mat2>& weights, const TrainingPattern& pattern,
                                 const Qubit& weighted_sum, double gamma);

// Indices of patterns whose sum collides with a different-class sum within
// eps_collide, or whose sum has norm <= eps_zero. Same-class collisions are
// accepted.
std::vector<std::size_t> detect_conflicts(const std::vector<Qubit>& sums,
                                          const std::vector<Qubit>& targets, double eps_collide,
                                          double eps_zero);

Model train(const std::vector<TrainingPattern>& patterns, const TrainConfig& config);

} // namespace aqpnn
