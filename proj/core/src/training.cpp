#include "aqpnn/training.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>

namespace aqpnn {

Qubit compute_weighted_sum(const std::vector<Mat2>& weights, const std::vector<Qubit>& inputs) {
    if (weights.size() != inputs.size() || weights.empty())
        throw LengthMismatch("compute_weighted_sum: " + std::to_string(weights.size()) +
                             " weights vs " + std::to_string(inputs.size()) + " inputs");
    Qubit sum;
    for (std::size_t i = 0; i < weights.size(); ++i) sum = sum + mat_apply(weights[i], inputs[i]);
    return sum;
}

std::vector<Mat2> update_weights(const std::vector<Mat2>& weights, const TrainingPattern& pattern,
                                 const Qubit& weighted_sum, double gamma) {
    const Qubit error = pattern.target - weighted_sum;
    std::vector<Mat2> next = weights;
    for (std::size_t i = 0; i < next.size(); ++i)
        next[i] = next[i] + gamma * outer_product(error, pattern.inputs[i]);
    return next;
}

std::vector<std::size_t> detect_conflicts(const std::vector<Qubit>& sums,
                                          const std::vector<Qubit>& targets, double eps_collide,
                                          double eps_zero) {
    if (sums.size() != targets.size())
        throw LengthMismatch("detect_conflicts: sums vs targets length");
    std::set<std::size_t> bad;
    for (std::size_t i = 0; i < sums.size(); ++i) {
        if (sums[i].norm() <= eps_zero) {
            bad.insert(i);
            continue;
        }
        for (std::size_t j = 0; j < sums.size(); ++j) {
            if (j == i) continue;
            if (approx_eq(sums[i], sums[j], eps_collide) &&
                !approx_eq(targets[i], targets[j], eps_collide))
                bad.insert(i);
        }
    }
    return {bad.begin(), bad.end()};
}

namespace {

std::vector<Mat2> initial_weights(std::size_t n, const TrainConfig& cfg) {
    switch (cfg.init) {
    case WeightInit::Identity:
        return std::vector<Mat2>(n, Mat2::identity());
    case WeightInit::Explicit:
        if (cfg.init_weights.size() != n)
            throw ConfigError("explicit init needs one weight operator per input");
        return cfg.init_weights;
    case WeightInit::RandomUniform: {
        std::mt19937_64 rng(cfg.seed);
        std::uniform_real_distribution<double> dist(cfg.init_lo, cfg.init_hi);
        std::vector<Mat2> w(n);
        for (auto& mat : w)
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) mat(i, j) = dist(rng);
        return w;
    }
    }
    throw ConfigError("unknown weight init");
}

// Pick the candidate to realize for a pattern none of whose candidates match
// an already-selected operator. Candidates shared with another pattern's
// solution set are preferred (in branch order) so that repeated operators
// actually repeat and get discarded; otherwise the first branch wins.
const ActivationOperator& pick_candidate(const SolveResult& mine,
                                         const std::vector<SolveResult>& all,
                                         std::size_t my_index) {
    for (const auto& cand : mine.candidates) {
        for (std::size_t k = 0; k < all.size(); ++k) {
            if (k == my_index) continue;
            for (const auto& other : all[k].candidates)
                if (approx_eq(cand.matrix, other.matrix, kDedupEps)) return cand;
        }
    }
    return mine.candidates.front();
}

} // namespace

Model train(const std::vector<TrainingPattern>& patterns, const TrainConfig& config) {
    if (patterns.empty()) throw InvalidPattern("no training patterns");
    if (!(config.gamma > 0.0 && config.gamma < 1.0))
        throw ConfigError("learning rate must satisfy 0 < gamma < 1");
    if (config.max_epochs < 1) throw ConfigError("max_epochs must be positive");

    const std::size_t n = patterns[0].inputs.size();
    if (n == 0) throw InvalidPattern("patterns need at least one input qubit");
    for (std::size_t p = 0; p < patterns.size(); ++p) {
        if (patterns[p].inputs.size() != n)
            throw InvalidPattern("pattern " + std::to_string(p) + " has inconsistent input count");
        for (const auto& q : patterns[p].inputs)
            if (!q.is_normalized())
                throw InvalidPattern("pattern " + std::to_string(p) + " has unnormalized input");
        if (!patterns[p].target.is_normalized())
            throw InvalidPattern("pattern " + std::to_string(p) + " has unnormalized target");
    }

    std::vector<Qubit> targets;
    targets.reserve(patterns.size());
    for (const auto& p : patterns) targets.push_back(p.target);

    std::vector<Mat2> weights = initial_weights(n, config);
    int epochs = 0;

    while (true) {
        ++epochs; // one Step-2 pass

        std::vector<Qubit> sums;
        sums.reserve(patterns.size());
        for (const auto& p : patterns) sums.push_back(compute_weighted_sum(weights, p.inputs));

        // Step 3: collisions and zero sums, plus sums the angle solve cannot
        // reach (target amplitude above the sum's norm).
        std::vector<std::size_t> offending =
            detect_conflicts(sums, targets, config.eps_collide, config.eps_zero);
        std::vector<SolveResult> solutions(patterns.size());
        for (std::size_t p = 0; p < patterns.size(); ++p) {
            if (std::binary_search(offending.begin(), offending.end(), p)) continue;
            try {
                solutions[p] = solve_activation(sums[p], patterns[p].target);
            } catch (const Error&) {
                offending.push_back(p);
            }
        }
        std::sort(offending.begin(), offending.end());

        if (offending.empty()) {
            // Step 5: realize one operator per pattern, discarding repeats.
            Model model;
            model.n = n;
            model.weights = std::move(weights);
            model.epochs_used = epochs;
            model.config = config;
            model.pattern_ops.resize(patterns.size());
            auto existing_match = [&](const SolveResult& res) -> int {
                // Matrix + target match first, then matrix-only.
                for (const auto& cand : res.candidates)
                    for (std::size_t k = 0; k < model.operators.size(); ++k)
                        if (approx_eq(cand.matrix, model.operators[k].matrix, kDedupEps) &&
                            approx_eq(cand.target, model.operators[k].target, kDedupEps))
                            return static_cast<int>(k);
                for (const auto& cand : res.candidates)
                    for (std::size_t k = 0; k < model.operators.size(); ++k)
                        if (approx_eq(cand.matrix, model.operators[k].matrix, kDedupEps))
                            return static_cast<int>(k);
                return -1;
            };
            for (std::size_t p = 0; p < patterns.size(); ++p) {
                int index = existing_match(solutions[p]);
                if (index < 0) {
                    index = static_cast<int>(model.operators.size());
                    model.operators.push_back(pick_candidate(solutions[p], solutions, p));
                }
                model.pattern_ops[p] = index;
            }
            return model;
        }

        if (epochs >= config.max_epochs) throw NonConvergence(config.max_epochs);

        // Step 4: each offending pattern updates every weight operator, in
        // index order, against the sums of this epoch.
        for (std::size_t p : offending)
            weights = update_weights(weights, patterns[p], sums[p], config.gamma);
    }
}

} // namespace aqpnn
