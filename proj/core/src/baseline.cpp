#include "aqpnn/baseline.hpp"

#include <numeric>

#include "aqpnn/errors.hpp"

namespace aqpnn {

int ClassicalPerceptron::predict(const std::vector<double>& x) const {
    const double net =
        std::inner_product(weights.begin(), weights.end(), x.begin(), bias);
    return net >= 0.0 ? 1 : 0;
}

ClassicalTrainResult classical_train(const std::vector<ClassicalSample>& samples, double rate,
                                     int max_epochs) {
    if (samples.empty()) throw InvalidPattern("no samples");
    if (rate <= 0.0) throw ConfigError("rate must be positive");
    const std::size_t dim = samples[0].features.size();
    for (const auto& s : samples)
        if (s.features.size() != dim) throw InvalidPattern("inconsistent feature dimension");

    ClassicalTrainResult result;
    result.perceptron.weights.assign(dim, 0.0);
    result.perceptron.learning_rate = rate;

    for (int epoch = 1; epoch <= max_epochs; ++epoch) {
        result.epochs = epoch;
        bool updated = false;
        for (const auto& s : samples) {
            const int out = result.perceptron.predict(s.features);
            const double delta = rate * (s.label - out);
            if (delta == 0.0) continue;
            updated = true;
            for (std::size_t i = 0; i < dim; ++i)
                result.perceptron.weights[i] += delta * s.features[i];
            result.perceptron.bias += delta;
        }
        if (!updated) {
            result.converged = true;
            return result;
        }
    }
    return result;
}

} // namespace aqpnn
