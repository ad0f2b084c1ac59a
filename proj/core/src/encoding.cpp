#include "aqpnn/encoding.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace aqpnn {

namespace {

// Raw (a1, a2) coordinates plus class index, straight from the two training
// tables of the overlapped-classes task.
struct RawPoint {
    double a1, a2;
    int cls; // 0 = oval, 1 = square
};

constexpr RawPoint kOverlapPoints[] = {
    {0.1, 0.0, 0},  {0.1, 0.2, 0},   {0.0, 0.1, 0},  {-0.1, 0.2, 0},
    {-0.1, 0.0, 0}, {0.0, -0.1, 0},  {0.1, -0.2, 0}, {-0.1, -0.2, 0},
    {0.1, 0.1, 1},  {0.0, 0.0, 1},   {0.0, 0.2, 1},  {-0.1, 0.1, 1},
    {0.1, -0.1, 1}, {-0.1, -0.1, 1}, {0.0, -0.2, 1},
};

const Qubit kZero{1.0, 0.0};
const Qubit kOne{0.0, 1.0};

} // namespace

std::string Dataset::label_for(const Qubit& q) const {
    const std::pair<Qubit, std::string>* best = nullptr;
    double best_d = 0.0;
    for (const auto& entry : class_labels) {
        const Qubit diff = entry.first - q;
        const double d = diff.norm_sq();
        if (!best || d < best_d) {
            best = &entry;
            best_d = d;
        }
    }
    return best ? best->second : "";
}

Qubit encode_scalar(double a) {
    if (std::abs(a) > 1.0)
        throw OutOfRange("cannot encode " + std::to_string(a) + ": |a| > 1");
    return {a, std::sqrt(1.0 - a * a)};
}

Dataset builtin_dataset(const std::string& name) {
    Dataset ds;
    ds.name = name;
    if (name == "not-gate") {
        ds.patterns = {{{kZero}, kOne}, {{kOne}, kZero}};
        ds.class_labels = {{kOne, "A"}, {kZero, "B"}};
    } else if (name == "hadamard") {
        const double s = 1.0 / std::sqrt(2.0);
        const Qubit plus{s, s};
        const Qubit minus{s, -s};
        ds.patterns = {{{kZero}, plus}, {{kOne}, minus}};
        ds.class_labels = {{plus, "A"}, {minus, "B"}};
    } else if (name == "xor") {
        ds.patterns = {
            {{kZero, kZero}, kZero},
            {{kOne, kOne}, kZero},
            {{kZero, kOne}, kOne},
            {{kOne, kZero}, kOne},
        };
        ds.class_labels = {{kZero, "A"}, {kOne, "B"}};
    } else if (name == "overlap") {
        for (const auto& pt : kOverlapPoints)
            ds.patterns.push_back(
                {{encode_scalar(pt.a1), encode_scalar(pt.a2)}, pt.cls == 0 ? kZero : kOne});
        ds.class_labels = {{kZero, "oval"}, {kOne, "square"}};
    } else {
        throw UnknownDataset("unknown dataset '" + name + "'");
    }
    return ds;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, ',')) {
        // trim surrounding whitespace
        const auto first = cell.find_first_not_of(" \t\r");
        const auto last = cell.find_last_not_of(" \t\r");
        cells.push_back(first == std::string::npos ? "" : cell.substr(first, last - first + 1));
    }
    if (!line.empty() && line.back() == ',') cells.push_back("");
    return cells;
}

} // namespace

Dataset load_csv(const std::filesystem::path& path, std::size_t n_columns,
                 const std::string& label_column) {
    std::ifstream in(path);
    if (!in) throw IOError("cannot open " + path.string());

    std::string line;
    if (!std::getline(in, line) || line.empty())
        throw ParseError(path.string() + ": missing header row");
    const std::vector<std::string> header = split_csv_line(line);

    std::size_t label_idx = header.size();
    for (std::size_t i = 0; i < header.size(); ++i)
        if (header[i] == label_column) label_idx = i;
    if (label_idx == header.size())
        throw ParseError(path.string() + ": no column named '" + label_column + "'");

    std::vector<std::size_t> feature_idx;
    for (std::size_t i = 0; i < header.size(); ++i)
        if (i != label_idx) feature_idx.push_back(i);
    if (n_columns != 0 && feature_idx.size() != n_columns)
        throw ParseError(path.string() + ": expected " + std::to_string(n_columns) +
                         " feature columns, found " + std::to_string(feature_idx.size()));

    Dataset ds;
    ds.name = path.stem().string();
    const Qubit codes[2] = {kZero, kOne};

    std::size_t row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (line.empty()) continue;
        const std::vector<std::string> cells = split_csv_line(line);
        if (cells.size() != header.size())
            throw ParseError(path.string() + ": row " + std::to_string(row) + " has " +
                             std::to_string(cells.size()) + " cells, header has " +
                             std::to_string(header.size()));
        TrainingPattern pattern;
        for (std::size_t i : feature_idx) {
            double value = 0.0;
            try {
                std::size_t pos = 0;
                value = std::stod(cells[i], &pos);
                if (pos != cells[i].size()) throw std::invalid_argument("trailing junk");
            } catch (const std::exception&) {
                throw ParseError(path.string() + ": row " + std::to_string(row) + ", column '" +
                                 header[i] + "': not a number: '" + cells[i] + "'");
            }
            if (std::abs(value) > 1.0)
                throw OutOfRange(path.string() + ": row " + std::to_string(row) + ", column '" +
                                 header[i] + "': value " + cells[i] + " outside [-1,1]");
            pattern.inputs.push_back(encode_scalar(value));
        }

        const std::string& label = cells[label_idx];
        std::size_t cls = ds.class_labels.size();
        for (std::size_t c = 0; c < ds.class_labels.size(); ++c)
            if (ds.class_labels[c].second == label) cls = c;
        if (cls == ds.class_labels.size()) {
            if (cls >= 2) throw TooManyClasses(path.string() + ": more than two class labels");
            ds.class_labels.emplace_back(codes[cls], label);
        }
        pattern.target = codes[cls];
        ds.patterns.push_back(std::move(pattern));
    }
    if (ds.patterns.empty()) throw ParseError(path.string() + ": no data rows");
    return ds;
}

void save_csv(const Dataset& dataset, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IOError("cannot write " + path.string());
    out.precision(17);
    const std::size_t n = dataset.n();
    for (std::size_t i = 0; i < n; ++i) out << "x" << i + 1 << ",";
    out << "label\n";
    for (const auto& pattern : dataset.patterns) {
        for (const auto& q : pattern.inputs) out << q.alpha << ",";
        out << dataset.label_for(pattern.target) << "\n";
    }
}

std::string dataset_to_json(const Dataset& dataset) {
    nlohmann::ordered_json j;
    j["name"] = dataset.name;
    j["n"] = dataset.n();
    j["patterns"] = nlohmann::ordered_json::array();
    for (const auto& pattern : dataset.patterns) {
        nlohmann::ordered_json p;
        p["inputs"] = nlohmann::ordered_json::array();
        for (const auto& q : pattern.inputs) p["inputs"].push_back({q.alpha, q.beta});
        p["target"] = {pattern.target.alpha, pattern.target.beta};
        j["patterns"].push_back(std::move(p));
    }
    return j.dump(2);
}

} // namespace aqpnn
