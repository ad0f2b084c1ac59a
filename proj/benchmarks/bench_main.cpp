#include <cmath>
#include <random>

#include <benchmark/benchmark.h>

#include "aqpnn/encoding.hpp"
#include "aqpnn/inference.hpp"
#include "aqpnn/training.hpp"

using namespace aqpnn;

static void BM_SolveActivation(benchmark::State& state) {
    std::mt19937 rng(1);
    std::uniform_real_distribution<double> radius(1.0, 5.0);
    std::uniform_real_distribution<double> angle(-M_PI, M_PI);
    for (auto _ : state) {
        const double r = radius(rng), a = angle(rng), t = angle(rng);
        benchmark::DoNotOptimize(
            solve_activation({r * std::cos(a), r * std::sin(a)}, {std::cos(t), std::sin(t)}));
    }
}
BENCHMARK(BM_SolveActivation);

static void BM_TrainXor(benchmark::State& state) {
    const auto patterns = builtin_dataset("xor").patterns;
    TrainConfig cfg;
    cfg.init = WeightInit::Explicit;
    const Mat2 w{{{{1.1, 1.2}, {0.0, 0.0}}}};
    cfg.init_weights = {w, w};
    for (auto _ : state) benchmark::DoNotOptimize(train(patterns, cfg));
}
BENCHMARK(BM_TrainXor);

static void BM_TrainOverlap(benchmark::State& state) {
    const auto patterns = builtin_dataset("overlap").patterns;
    TrainConfig cfg;
    cfg.init = WeightInit::RandomUniform;
    cfg.seed = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(train(patterns, cfg));
}
BENCHMARK(BM_TrainOverlap)->Arg(0)->Arg(7);

static void BM_SelectResponse(benchmark::State& state) {
    TrainConfig cfg;
    cfg.init = WeightInit::RandomUniform;
    cfg.seed = 7;
    const Dataset ds = builtin_dataset("overlap");
    const Model model = train(ds.patterns, cfg);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            select_response(model, ds.patterns[i % ds.patterns.size()].inputs,
                            ResponseMode::Classify));
        ++i;
    }
}
BENCHMARK(BM_SelectResponse);

BENCHMARK_MAIN();
