#pragma once

#include <vector>

#include "aqpnn/training.hpp"

namespace aqpnn {

enum class ResponseMode { Classify, Transform };

struct ResponseReport {
    Qubit weighted_sum;
    std::vector<double> scores; // one per unique operator, >= 0
    int selected_index = -1;    // argmin of scores, lowest index on ties
    Qubit response;
    ResponseMode mode = ResponseMode::Classify;
};

// [F_j * y] for every unique operator, y = sum_i w_i |x_i>.
std::vector<Qubit> superposition_output(const Model& model, const std::vector<Qubit>& inputs);

// Scores each operator by | ||F_j * y||^2 - 1 | and keeps the argmin.
// Classify mode answers with the winner's stored target; transform mode with
// the winner applied to the weighted sum.
ResponseReport select_response(const Model& model, const std::vector<Qubit>& inputs,
                               ResponseMode mode);

} // namespace aqpnn
