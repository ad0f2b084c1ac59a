#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "aqpnn/training.hpp"

namespace aqpnn {

struct StoredModel {
    Model model;
    std::vector<std::pair<Qubit, std::string>> class_labels;
};

// {version, n, weights, operators:[{theta, phi, matrix, target}],
//  pattern_ops, config, class_labels} with lossless reals.
std::string model_to_json(const StoredModel& stored);
StoredModel model_from_json(const std::string& text);

void save_model(const StoredModel& stored, const std::filesystem::path& path);
StoredModel load_model(const std::filesystem::path& path);

} // namespace aqpnn
