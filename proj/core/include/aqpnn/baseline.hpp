#pragma once

#include <vector>

namespace aqpnn {

// Classical single-neuron perceptron (step activation, {0,1} outputs),
// trained on raw reals. Kept for the one-neuron comparison.
struct ClassicalPerceptron {
    std::vector<double> weights;
    double bias = 0.0;
    double learning_rate = 0.1;

    int predict(const std::vector<double>& x) const;
};

struct ClassicalSample {
    std::vector<double> features;
    int label; // 0 or 1
};

struct ClassicalTrainResult {
    ClassicalPerceptron perceptron;
    bool converged = false;
    int epochs = 0;
};

// w <- w + rate * (label - prediction) * x; converged when an epoch makes no
// update.
ClassicalTrainResult classical_train(const std::vector<ClassicalSample>& samples, double rate,
                                     int max_epochs);

} // namespace aqpnn
