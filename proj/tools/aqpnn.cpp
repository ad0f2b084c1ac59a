// Command line front end: reproduce the built-in experiments, train on CSV
// data, predict with a saved model, and compare against the classical
// single-neuron baseline.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "aqpnn/baseline.hpp"
#include "aqpnn/encoding.hpp"
#include "aqpnn/inference.hpp"
#include "aqpnn/model_io.hpp"

namespace {

using aqpnn::Dataset;
using aqpnn::Model;
using aqpnn::Qubit;
using aqpnn::ResponseMode;
using json = nlohmann::ordered_json;

constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;
constexpr double kCorrectEps = 1e-6;

std::uint64_t default_seed() {
    if (const char* env = std::getenv("AQPNN_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw aqpnn::ConfigError("AQPNN_SEED is not an unsigned integer");
        }
    }
    return 0;
}

bool is_gate_experiment(const std::string& name) {
    return name == "not-gate" || name == "hadamard";
}

aqpnn::TrainConfig repro_config(const std::string& name) {
    aqpnn::TrainConfig cfg;
    cfg.gamma = 0.1;
    if (is_gate_experiment(name)) {
        cfg.init = aqpnn::WeightInit::Identity;
    } else if (name == "xor") {
        cfg.init = aqpnn::WeightInit::Explicit;
        const aqpnn::Mat2 w{{{{1.1, 1.2}, {0.0, 0.0}}}};
        cfg.init_weights = {w, w};
    } else {
        cfg.init = aqpnn::WeightInit::RandomUniform;
        cfg.init_lo = -1.0;
        cfg.init_hi = 1.0;
    }
    return cfg;
}

json qubit_json(const Qubit& q) { return json::array({q.alpha, q.beta}); }

struct RunReport {
    std::string experiment;
    Model model;
    Dataset dataset;
    ResponseMode mode = ResponseMode::Classify;
    std::vector<aqpnn::ResponseReport> responses;
    double accuracy = 0.0;
    std::vector<std::string> notes;
};

RunReport evaluate(const std::string& experiment, Model model, Dataset dataset,
                   ResponseMode mode) {
    RunReport report;
    report.experiment = experiment;
    report.dataset = std::move(dataset);
    report.model = std::move(model);
    report.mode = mode;
    int correct = 0;
    for (const auto& pattern : report.dataset.patterns) {
        report.responses.push_back(aqpnn::select_response(report.model, pattern.inputs, mode));
        if (aqpnn::approx_eq(report.responses.back().response, pattern.target, kCorrectEps))
            ++correct;
    }
    report.accuracy = static_cast<double>(correct) / report.dataset.patterns.size();
    return report;
}

json report_json(const RunReport& report) {
    json j;
    j["experiment"] = report.experiment;
    j["epochs_used"] = report.model.epochs_used;
    j["unique_operators"] = report.model.operators.size();
    j["mode"] = report.mode == ResponseMode::Classify ? "classify" : "transform";
    j["per_pattern"] = json::array();
    for (std::size_t p = 0; p < report.dataset.patterns.size(); ++p) {
        const auto& pattern = report.dataset.patterns[p];
        const auto& resp = report.responses[p];
        json entry;
        entry["inputs"] = json::array();
        for (const auto& q : pattern.inputs) entry["inputs"].push_back(qubit_json(q));
        entry["weighted_sum"] = qubit_json(resp.weighted_sum);
        entry["operator_index"] = resp.selected_index;
        entry["response"] = qubit_json(resp.response);
        entry["target"] = qubit_json(pattern.target);
        entry["correct"] = aqpnn::approx_eq(resp.response, pattern.target, kCorrectEps);
        j["per_pattern"].push_back(std::move(entry));
    }
    j["accuracy"] = report.accuracy;
    const auto& cfg = report.model.config;
    json jcfg;
    jcfg["gamma"] = cfg.gamma;
    jcfg["max_epochs"] = cfg.max_epochs;
    jcfg["eps_collide"] = cfg.eps_collide;
    jcfg["eps_zero"] = cfg.eps_zero;
    jcfg["seed"] = cfg.seed;
    jcfg["init"] = cfg.init == aqpnn::WeightInit::Identity       ? "identity"
                   : cfg.init == aqpnn::WeightInit::RandomUniform ? "random-uniform"
                                                                  : "explicit";
    j["config"] = std::move(jcfg);
    if (!report.notes.empty()) j["notes"] = report.notes;
    return j;
}

void print_report(const RunReport& report, const std::string& format) {
    if (format == "json") {
        std::cout << report_json(report).dump(2) << "\n";
        return;
    }
    std::cout << "experiment: " << report.experiment << "\n"
              << "epochs_used: " << report.model.epochs_used << "\n"
              << "unique_operators: " << report.model.operators.size() << "\n"
              << "mode: " << (report.mode == ResponseMode::Classify ? "classify" : "transform")
              << "\n";
    std::cout << "| # | weighted sum | op | response | target | correct |\n"
              << "|---|--------------|----|----------|--------|---------|\n";
    char line[256];
    for (std::size_t p = 0; p < report.responses.size(); ++p) {
        const auto& r = report.responses[p];
        const auto& t = report.dataset.patterns[p].target;
        std::snprintf(line, sizeof line,
                      "| %zu | [%.4f, %.4f] | %d | [%.4f, %.4f] | [%.4f, %.4f] | %s |\n", p + 1,
                      r.weighted_sum.alpha, r.weighted_sum.beta, r.selected_index,
                      r.response.alpha, r.response.beta, t.alpha, t.beta,
                      aqpnn::approx_eq(r.response, t, kCorrectEps) ? "yes" : "no");
        std::cout << line;
    }
    std::snprintf(line, sizeof line, "accuracy: %.4f\n", report.accuracy);
    std::cout << line;
    for (const auto& note : report.notes) std::cout << "note: " << note << "\n";
}

// Raw classical view of a dataset: feature vector = first amplitudes of the
// input qubits, label = class index.
std::vector<aqpnn::ClassicalSample> classical_view(const Dataset& ds) {
    std::vector<aqpnn::ClassicalSample> samples;
    for (const auto& pattern : ds.patterns) {
        aqpnn::ClassicalSample s;
        for (const auto& q : pattern.inputs) s.features.push_back(q.alpha);
        s.label = 0;
        for (std::size_t c = 0; c < ds.class_labels.size(); ++c)
            if (aqpnn::approx_eq(ds.class_labels[c].first, pattern.target, kCorrectEps))
                s.label = static_cast<int>(c);
        samples.push_back(std::move(s));
    }
    return samples;
}

int run(int argc, char** argv) {
    CLI::App app{"Autonomous quantum perceptron: one neuron, self-built 2x2 activation operators"};
    app.require_subcommand(1);

    std::string format = "json";
    double gamma = 0.1;
    int max_epochs = 1000;
    std::optional<std::uint64_t> seed_flag;

    // repro
    auto* repro = app.add_subcommand("repro", "Re-run a built-in experiment");
    std::string repro_name;
    std::string repro_mode = "auto";
    repro->add_option("name", repro_name, "not-gate | hadamard | xor | overlap")->required();
    repro->add_option("--gamma", gamma, "learning rate in (0,1)");
    repro->add_option("--seed", seed_flag, "RNG seed for random weight init");
    repro->add_option("--max-epochs", max_epochs, "epoch limit");
    repro->add_option("--mode", repro_mode, "classify | transform | auto")
        ->check(CLI::IsMember({"classify", "transform", "auto"}));
    repro->add_option("--format", format, "json | table")
        ->check(CLI::IsMember({"json", "table"}));
    std::string repro_out;
    repro->add_option("--out", repro_out, "also save the trained model JSON here");

    // train
    auto* train_cmd = app.add_subcommand("train", "Train on a CSV dataset");
    std::string data_path, out_path, label_column = "label";
    train_cmd->add_option("--data", data_path, "CSV file")->required();
    train_cmd->add_option("--gamma", gamma, "learning rate in (0,1)");
    train_cmd->add_option("--seed", seed_flag, "RNG seed for random weight init");
    train_cmd->add_option("--max-epochs", max_epochs, "epoch limit");
    train_cmd->add_option("--out", out_path, "model JSON output path");
    train_cmd->add_option("--label-column", label_column, "name of the label column");
    train_cmd->add_option("--format", format, "json | table")
        ->check(CLI::IsMember({"json", "table"}));

    // predict
    auto* predict = app.add_subcommand("predict", "Run a saved model on one input");
    std::string model_path, input_text, predict_mode = "classify";
    bool basis = false;
    predict->add_option("--model", model_path, "model JSON file")->required();
    predict->add_option("--input", input_text, "comma-separated reals in [-1,1]")->required();
    predict->add_option("--mode", predict_mode, "classify | transform")
        ->check(CLI::IsMember({"classify", "transform"}));
    predict->add_flag("--basis", basis, "treat each value as a bit: 1 -> [1,0], 0 -> [0,1]");

    // compare
    auto* compare = app.add_subcommand("compare", "AQPNN vs classical one-neuron perceptron");
    std::string compare_target;
    compare->add_option("dataset", compare_target, "built-in name or CSV path")->required();
    compare->add_option("--gamma", gamma, "learning rate in (0,1)");
    compare->add_option("--seed", seed_flag, "RNG seed for random weight init");
    compare->add_option("--max-epochs", max_epochs, "epoch limit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    const std::uint64_t seed = seed_flag ? *seed_flag : default_seed();

    if (repro->parsed()) {
        Dataset ds = aqpnn::builtin_dataset(repro_name);
        aqpnn::TrainConfig cfg = repro_config(repro_name);
        cfg.gamma = gamma;
        cfg.max_epochs = max_epochs;
        cfg.seed = seed;
        Model model = aqpnn::train(ds.patterns, cfg);
        if (!repro_out.empty()) aqpnn::save_model({model, ds.class_labels}, repro_out);
        const ResponseMode mode =
            repro_mode == "auto"
                ? (is_gate_experiment(repro_name) ? ResponseMode::Transform
                                                  : ResponseMode::Classify)
                : (repro_mode == "transform" ? ResponseMode::Transform : ResponseMode::Classify);
        RunReport report = evaluate(repro_name, std::move(model), std::move(ds), mode);
        if (repro_name == "overlap")
            report.notes.push_back(
                "training-set accuracy only: the original 176-pattern test set has no "
                "published generation rule, so generalization is not reproducible");
        print_report(report, format);
        return 0;
    }

    if (train_cmd->parsed()) {
        Dataset ds = aqpnn::load_csv(data_path, 0, label_column);
        aqpnn::TrainConfig cfg;
        cfg.gamma = gamma;
        cfg.max_epochs = max_epochs;
        cfg.seed = seed;
        cfg.init = aqpnn::WeightInit::RandomUniform;
        Model model = aqpnn::train(ds.patterns, cfg);
        if (!out_path.empty()) aqpnn::save_model({model, ds.class_labels}, out_path);
        print_report(evaluate(ds.name, std::move(model), std::move(ds), ResponseMode::Classify),
                     format);
        return 0;
    }

    if (predict->parsed()) {
        const aqpnn::StoredModel stored = aqpnn::load_model(model_path);
        std::vector<double> values;
        std::istringstream in(input_text);
        std::string cell;
        while (std::getline(in, cell, ',')) {
            try {
                values.push_back(std::stod(cell));
            } catch (const std::exception&) {
                std::cerr << "error: not a number: '" << cell << "'\n";
                return kExitUsage;
            }
        }
        if (values.size() != stored.model.n) {
            std::cerr << "error: model expects " << stored.model.n << " inputs, got "
                      << values.size() << "\n";
            return kExitUsage;
        }
        std::vector<Qubit> inputs;
        for (double v : values) {
            if (basis) {
                if (v != 0.0 && v != 1.0) {
                    std::cerr << "error: --basis inputs must be 0 or 1\n";
                    return kExitUsage;
                }
                inputs.push_back(v == 1.0 ? Qubit{1.0, 0.0} : Qubit{0.0, 1.0});
            } else {
                if (std::abs(v) > 1.0) {
                    std::cerr << "error: input value " << v << " outside [-1,1]\n";
                    return kExitUsage;
                }
                inputs.push_back(aqpnn::encode_scalar(v));
            }
        }
        const ResponseMode mode =
            predict_mode == "transform" ? ResponseMode::Transform : ResponseMode::Classify;
        const aqpnn::ResponseReport resp = aqpnn::select_response(stored.model, inputs, mode);
        json j;
        j["response"] = qubit_json(resp.response);
        if (mode == ResponseMode::Classify) {
            Dataset labels;
            labels.class_labels = stored.class_labels;
            j["label"] = labels.label_for(resp.response);
        }
        j["operator_index"] = resp.selected_index;
        j["scores"] = resp.scores;
        std::cout << j.dump(2) << "\n";
        return 0;
    }

    // compare
    const bool builtin = compare_target == "xor" || compare_target == "overlap" ||
                         compare_target == "not-gate" || compare_target == "hadamard";
    Dataset ds = builtin ? aqpnn::builtin_dataset(compare_target)
                         : aqpnn::load_csv(compare_target, 0, "label");
    aqpnn::TrainConfig cfg =
        builtin ? repro_config(compare_target) : aqpnn::TrainConfig{};
    if (!builtin) cfg.init = aqpnn::WeightInit::RandomUniform;
    cfg.gamma = gamma;
    cfg.max_epochs = max_epochs;
    cfg.seed = seed;
    const RunReport report =
        evaluate(compare_target, aqpnn::train(ds.patterns, cfg), ds,
                 is_gate_experiment(compare_target) ? ResponseMode::Transform
                                                    : ResponseMode::Classify);

    const auto classical = aqpnn::classical_train(classical_view(ds), 0.1, 1000);
    char buf[256];
    std::cout << "| Algorithm | Iterations | Result |\n|---|---|---|\n";
    std::snprintf(buf, sizeof buf, "| AQPNN | %d | training accuracy %.4f |\n",
                  report.model.epochs_used, report.accuracy);
    std::cout << buf;
    if (compare_target == "xor")
        std::cout << "| Zhou perceptron | 16 [1] | solves XOR |\n";
    if (classical.converged)
        std::snprintf(buf, sizeof buf, "| Classical perceptron (one neuron) | %d | converged |\n",
                      classical.epochs);
    else
        std::snprintf(buf, sizeof buf,
                      "| Classical perceptron (one neuron) | - | not converged within %d epochs |\n",
                      classical.epochs);
    std::cout << buf;
    if (compare_target == "xor")
        std::cout << "\n[1] reported value, not recomputed here.\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const aqpnn::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const aqpnn::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
}
