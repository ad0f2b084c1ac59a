#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "aqpnn/training.hpp"

namespace aqpnn {

struct Dataset {
    std::string name;
    std::vector<TrainingPattern> patterns;
    // target qubit -> human label, in first-seen order
    std::vector<std::pair<Qubit, std::string>> class_labels;

    std::size_t n() const { return patterns.empty() ? 0 : patterns[0].inputs.size(); }
    // Label bound to the class target nearest to q, or "" when none is known.
    std::string label_for(const Qubit& q) const;
};

// [a, sqrt(1 - a^2)]; requires |a| <= 1.
Qubit encode_scalar(double a);

// "not-gate", "hadamard", "xor" or "overlap".
Dataset builtin_dataset(const std::string& name);

// Header row, feature columns as decimal reals in [-1,1], one string label
// column; at most two classes, coded [1,0] / [0,1] in first-seen order.
// n_columns == 0 accepts any feature count.
Dataset load_csv(const std::filesystem::path& path, std::size_t n_columns,
                 const std::string& label_column);

void save_csv(const Dataset& dataset, const std::filesystem::path& path);

// {name, n, patterns:[{inputs, target}]} JSON text.
std::string dataset_to_json(const Dataset& dataset);

} // namespace aqpnn
