#include <cmath>
#include <random>

#include <doctest.h>

#include "aqpnn/encoding.hpp"
#include "aqpnn/model_io.hpp"
#include "aqpnn/training.hpp"

using namespace aqpnn;

namespace {
Mat2 mat(double a, double b, double c, double d) { return {{{{a, b}, {c, d}}}}; }
} // namespace

TEST_CASE("compute_weighted_sum") {
    const Mat2 w = mat(1.1, 1.2, 0, 0);
    CHECK(approx_eq(compute_weighted_sum({w, w}, {{1, 0}, {1, 0}}), {2.2, 0}, 1e-15));
    CHECK(approx_eq(compute_weighted_sum({w, w}, {{0, 1}, {0, 1}}), {2.4, 0}, 1e-15));
    CHECK(approx_eq(compute_weighted_sum({Mat2::identity()}, {{0, 1}}), {0, 1}, 1e-15));
    CHECK_THROWS_AS(compute_weighted_sum({w}, {{1, 0}, {0, 1}}), LengthMismatch);
}

TEST_CASE("update_weights") {
    SUBCASE("zero error leaves weights alone") {
        const TrainingPattern p{{{1, 0}}, {1, 0}};
        const std::vector<Mat2> w{mat(1, 0, 0, 1)};
        const auto next = update_weights(w, p, {1, 0}, 0.5);
        CHECK(approx_eq(next[0], w[0], 0));
    }
    SUBCASE("hand-evaluated single step") {
        const TrainingPattern p{{{1, 0}}, {1, 0}};
        const auto next = update_weights({mat(0, 0, 0, 0)}, p, {0, 0}, 0.5);
        CHECK(approx_eq(next[0], mat(0.5, 0, 0, 0), 1e-15));
    }
    SUBCASE("equal inputs get equal increments") {
        const TrainingPattern p{{{0.6, 0.8}, {0.6, 0.8}}, {1, 0}};
        const std::vector<Mat2> w{mat(1, 2, 3, 4), mat(-1, 0, 0, 2)};
        const auto next = update_weights(w, p, {0.2, -0.1}, 0.3);
        const Mat2 inc0 = next[0] + (-1.0 * w[0]);
        const Mat2 inc1 = next[1] + (-1.0 * w[1]);
        CHECK(approx_eq(inc0, inc1, 1e-15));
    }
    SUBCASE("matches an elementwise oracle on random instances") {
        std::mt19937 rng(99);
        std::uniform_real_distribution<double> dist(-1.0, 1.0);
        for (int it = 0; it < 500; ++it) {
            const double angle = dist(rng) * 3.1;
            TrainingPattern p{{{std::cos(angle), std::sin(angle)}}, {0, 1}};
            const Qubit y{dist(rng), dist(rng)};
            const double gamma = 0.25;
            const Mat2 w = mat(dist(rng), dist(rng), dist(rng), dist(rng));
            const auto next = update_weights({w}, p, y, gamma);

            const double e[2] = {p.target.alpha - y.alpha, p.target.beta - y.beta};
            const double x[2] = {p.inputs[0].alpha, p.inputs[0].beta};
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    REQUIRE(next[0](i, j) == doctest::Approx(w(i, j) + gamma * e[i] * x[j])
                                                 .epsilon(1e-12));
        }
    }
}

TEST_CASE("detect_conflicts") {
    const Qubit a{1, 0}, b{0, 1};
    SUBCASE("XOR sums carry no conflict (same-class repeats are fine)") {
        const std::vector<Qubit> sums{{2.2, 0}, {2.4, 0}, {2.3, 0}, {2.3, 0}};
        const std::vector<Qubit> targets{a, a, b, b};
        CHECK(detect_conflicts(sums, targets, 1e-6, 1e-9).empty());
    }
    SUBCASE("exact cross-class collision flags both") {
        const std::vector<Qubit> sums{{1, 0}, {1, 0}};
        CHECK(detect_conflicts(sums, {a, b}, 1e-6, 1e-9) == std::vector<std::size_t>{0, 1});
    }
    SUBCASE("zero weighted sum is always a conflict") {
        const std::vector<Qubit> sums{{0, 0}, {1, 0}};
        const auto bad = detect_conflicts(sums, {a, a}, 1e-6, 1e-9);
        CHECK(bad == std::vector<std::size_t>{0});
    }
}

TEST_CASE("train reproduces the gate experiments") {
    TrainConfig cfg;
    cfg.init = WeightInit::Identity;

    SUBCASE("quantum NOT") {
        const Model m = train(builtin_dataset("not-gate").patterns, cfg);
        CHECK(m.epochs_used == 1);
        REQUIRE(m.operators.size() == 1);
        CHECK(approx_eq(m.operators[0].matrix, mat(0, 1, 1, 0), 1e-9));
        CHECK(m.pattern_ops == std::vector<int>{0, 0});
    }
    SUBCASE("Hadamard") {
        const double s = 1.0 / std::sqrt(2.0);
        const Model m = train(builtin_dataset("hadamard").patterns, cfg);
        CHECK(m.epochs_used == 1);
        REQUIRE(m.operators.size() == 1);
        CHECK(approx_eq(m.operators[0].matrix, mat(s, s, s, -s), 1e-9));
    }
}

TEST_CASE("train reproduces the XOR experiment") {
    TrainConfig cfg;
    cfg.init = WeightInit::Explicit;
    cfg.init_weights = {mat(1.1, 1.2, 0, 0), mat(1.1, 1.2, 0, 0)};
    const Model m = train(builtin_dataset("xor").patterns, cfg);
    CHECK(m.epochs_used == 1);
    REQUIRE(m.operators.size() == 3);
    CHECK(approx_eq(m.operators[0].matrix, mat(0.4545, -0.8907, 0, 1), 1e-3));
    CHECK(approx_eq(m.operators[1].matrix, mat(0.4167, -0.9091, 0, 1), 1e-3));
    CHECK(approx_eq(m.operators[2].matrix, mat(0, -1, 0.4348, 0.9005), 1e-3));
    CHECK(m.pattern_ops == std::vector<int>{0, 1, 2, 2});
}

TEST_CASE("post-training operator contract holds per pattern") {
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        TrainConfig cfg;
        cfg.init = WeightInit::RandomUniform;
        cfg.seed = seed;
        const Dataset ds = builtin_dataset("overlap");
        const Model m = train(ds.patterns, cfg);
        CHECK(static_cast<int>(m.operators.size()) <= static_cast<int>(ds.patterns.size()));
        for (std::size_t p = 0; p < ds.patterns.size(); ++p) {
            const Qubit y = compute_weighted_sum(m.weights, ds.patterns[p].inputs);
            const Qubit out = mat_apply(m.operators[m.pattern_ops[p]].matrix, y);
            CHECK(approx_eq(out, ds.patterns[p].target, 1e-6));
        }
    }
}

TEST_CASE("train is deterministic") {
    TrainConfig cfg;
    cfg.init = WeightInit::RandomUniform;
    cfg.seed = 1234;
    const auto patterns = builtin_dataset("overlap").patterns;
    const std::string a = model_to_json({train(patterns, cfg), {}});
    const std::string b = model_to_json({train(patterns, cfg), {}});
    CHECK(a == b);
}

TEST_CASE("train error paths") {
    SUBCASE("unnormalized input is rejected") {
        const std::vector<TrainingPattern> bad{{{{0.5, 0.5}}, {1, 0}}};
        CHECK_THROWS_AS(train(bad, {}), InvalidPattern);
    }
    SUBCASE("gamma outside (0,1) is rejected") {
        TrainConfig cfg;
        cfg.gamma = 1.5;
        CHECK_THROWS_AS(train(builtin_dataset("xor").patterns, cfg), ConfigError);
    }
    SUBCASE("identical inputs with different targets never converge") {
        const std::vector<TrainingPattern> clash{{{{1, 0}}, {1, 0}}, {{{1, 0}}, {0, 1}}};
        TrainConfig cfg;
        cfg.max_epochs = 50;
        CHECK_THROWS_AS(train(clash, cfg), NonConvergence);
    }
    SUBCASE("empty pattern list") {
        CHECK_THROWS_AS(train({}, {}), InvalidPattern);
    }
}
