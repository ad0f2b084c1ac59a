#include "aqpnn/model_io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace aqpnn {

namespace {

using json = nlohmann::ordered_json;

constexpr int kModelVersion = 1;

json qubit_to_json(const Qubit& q) { return json::array({q.alpha, q.beta}); }

Qubit qubit_from_json(const json& j) { return {j.at(0).get<double>(), j.at(1).get<double>()}; }

json mat_to_json(const Mat2& m) {
    return json::array({json::array({m(0, 0), m(0, 1)}), json::array({m(1, 0), m(1, 1)})});
}

Mat2 mat_from_json(const json& j) {
    Mat2 m;
    for (int i = 0; i < 2; ++i)
        for (int k = 0; k < 2; ++k) m(i, k) = j.at(i).at(k).get<double>();
    return m;
}

std::string init_name(WeightInit init) {
    switch (init) {
    case WeightInit::Identity: return "identity";
    case WeightInit::RandomUniform: return "random-uniform";
    case WeightInit::Explicit: return "explicit";
    }
    return "identity";
}

WeightInit init_from_name(const std::string& name) {
    if (name == "identity") return WeightInit::Identity;
    if (name == "random-uniform") return WeightInit::RandomUniform;
    if (name == "explicit") return WeightInit::Explicit;
    throw ParseError("unknown weight init '" + name + "'");
}

} // namespace

std::string model_to_json(const StoredModel& stored) {
    const Model& m = stored.model;
    json j;
    j["version"] = kModelVersion;
    j["n"] = m.n;
    j["weights"] = json::array();
    for (const auto& w : m.weights) j["weights"].push_back(mat_to_json(w));
    j["operators"] = json::array();
    for (const auto& op : m.operators) {
        json o;
        o["theta"] = op.theta;
        o["phi"] = op.phi;
        o["matrix"] = mat_to_json(op.matrix);
        o["target"] = qubit_to_json(op.target);
        j["operators"].push_back(std::move(o));
    }
    j["pattern_ops"] = m.pattern_ops;
    j["epochs_used"] = m.epochs_used;
    json cfg;
    cfg["gamma"] = m.config.gamma;
    cfg["max_epochs"] = m.config.max_epochs;
    cfg["eps_collide"] = m.config.eps_collide;
    cfg["eps_zero"] = m.config.eps_zero;
    cfg["seed"] = m.config.seed;
    cfg["init"] = init_name(m.config.init);
    if (m.config.init == WeightInit::RandomUniform) {
        cfg["init_lo"] = m.config.init_lo;
        cfg["init_hi"] = m.config.init_hi;
    }
    if (m.config.init == WeightInit::Explicit) {
        cfg["init_weights"] = json::array();
        for (const auto& w : m.config.init_weights) cfg["init_weights"].push_back(mat_to_json(w));
    }
    j["config"] = std::move(cfg);
    j["class_labels"] = json::array();
    for (const auto& [target, label] : stored.class_labels)
        j["class_labels"].push_back({{"target", qubit_to_json(target)}, {"label", label}});
    return j.dump(2);
}

StoredModel model_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid model JSON: ") + e.what());
    }
    try {
        StoredModel stored;
        Model& m = stored.model;
        if (j.at("version").get<int>() != kModelVersion)
            throw ParseError("unsupported model version");
        m.n = j.at("n").get<std::size_t>();
        for (const auto& w : j.at("weights")) m.weights.push_back(mat_from_json(w));
        for (const auto& o : j.at("operators")) {
            ActivationOperator op;
            op.theta = o.at("theta").get<double>();
            op.phi = o.at("phi").get<double>();
            op.matrix = mat_from_json(o.at("matrix"));
            op.target = qubit_from_json(o.at("target"));
            m.operators.push_back(op);
        }
        m.pattern_ops = j.at("pattern_ops").get<std::vector<int>>();
        m.epochs_used = j.at("epochs_used").get<int>();
        const json& cfg = j.at("config");
        m.config.gamma = cfg.at("gamma").get<double>();
        m.config.max_epochs = cfg.at("max_epochs").get<int>();
        m.config.eps_collide = cfg.at("eps_collide").get<double>();
        m.config.eps_zero = cfg.at("eps_zero").get<double>();
        m.config.seed = cfg.at("seed").get<std::uint64_t>();
        m.config.init = init_from_name(cfg.at("init").get<std::string>());
        if (cfg.contains("init_lo")) m.config.init_lo = cfg.at("init_lo").get<double>();
        if (cfg.contains("init_hi")) m.config.init_hi = cfg.at("init_hi").get<double>();
        if (cfg.contains("init_weights"))
            for (const auto& w : cfg.at("init_weights"))
                m.config.init_weights.push_back(mat_from_json(w));
        for (const auto& entry : j.at("class_labels"))
            stored.class_labels.emplace_back(qubit_from_json(entry.at("target")),
                                             entry.at("label").get<std::string>());
        return stored;
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed model JSON: ") + e.what());
    }
}

void save_model(const StoredModel& stored, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IOError("cannot write " + path.string());
    out << model_to_json(stored) << "\n";
}

StoredModel load_model(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IOError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return model_from_json(buf.str());
}

} // namespace aqpnn
