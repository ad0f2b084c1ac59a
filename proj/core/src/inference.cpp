#include "aqpnn/inference.hpp"

#include <cmath>
#include <string>

namespace aqpnn {

std::vector<Qubit> superposition_output(const Model& model, const std::vector<Qubit>& inputs) {
    if (inputs.size() != model.n)
        throw LengthMismatch("expected " + std::to_string(model.n) + " input qubits, got " +
                             std::to_string(inputs.size()));
    const Qubit y = compute_weighted_sum(model.weights, inputs);
    std::vector<Qubit> out;
    out.reserve(model.operators.size());
    for (const auto& op : model.operators) out.push_back(mat_apply(op.matrix, y));
    return out;
}

ResponseReport select_response(const Model& model, const std::vector<Qubit>& inputs,
                               ResponseMode mode) {
    if (model.operators.empty()) throw EmptyModel("model has no activation operators");
    const std::vector<Qubit> outputs = superposition_output(model, inputs);

    ResponseReport report;
    report.mode = mode;
    report.weighted_sum = compute_weighted_sum(model.weights, inputs);
    report.scores.reserve(outputs.size());
    for (const auto& q : outputs) report.scores.push_back(std::abs(q.norm_sq() - 1.0));

    report.selected_index = 0;
    for (std::size_t j = 1; j < report.scores.size(); ++j)
        if (report.scores[j] < report.scores[report.selected_index])
            report.selected_index = static_cast<int>(j);

    report.response = mode == ResponseMode::Classify
                          ? model.operators[report.selected_index].target
                          : outputs[report.selected_index];
    return report;
}

} // namespace aqpnn
