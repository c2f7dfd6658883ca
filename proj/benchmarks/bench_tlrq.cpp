#include <benchmark/benchmark.h>

#include <string>

#include "tlrq/env/pendulum.hpp"
#include "tlrq/learn/drivers.hpp"
#include "tlrq/learn/semigrad.hpp"
#include "tlrq/tensor/factor_set.hpp"

using namespace tlrq;

namespace {

// Desk-scale pendulum shape: 20 x 20 angle/velocity cells, 10 torques, 4 tasks.
const Dims kDims{400, 10, 4};

}  // namespace

static void BM_Evaluate(benchmark::State& state) {
    const FactorSet fs = new_factor_set(kDims, static_cast<std::size_t>(state.range(0)), 1);
    std::size_t s = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(evaluate(fs, s, s % 10, s % 4));
        s = (s + 37) % 400;
    }
}
BENCHMARK(BM_Evaluate)->Arg(4)->Arg(32);

static void BM_GreedyAction(benchmark::State& state) {
    const FactorSet fs = new_factor_set(kDims, static_cast<std::size_t>(state.range(0)), 2);
    std::size_t s = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(greedy_action(fs, s, s % 4));
        s = (s + 37) % 400;
    }
}
BENCHMARK(BM_GreedyAction)->Arg(4)->Arg(32);

static void BM_UpdateStep(benchmark::State& state) {
    FactorSet fs = new_factor_set(kDims, static_cast<std::size_t>(state.range(0)), 3);
    Rng rng(4);
    for (auto _ : state) {
        const learn::Transition t{rng.below(4), rng.below(400), rng.below(10), -1.0, rng.below(400)};
        learn::SparseGrad g = learn::semi_gradients(fs, t, 0.9, 1.0);
        learn::clip_rows(g, 10.0);
        learn::apply_update(fs, g, 1e-4);
    }
}
BENCHMARK(BM_UpdateStep)->Arg(4)->Arg(32);

static void BM_PendulumStep(benchmark::State& state) {
    env::PendulumEnv env({}, 20, 20, 10);
    Rng rng(5);
    env.reset(rng);
    std::size_t a = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(env.step(a, rng));
        a = (a + 3) % 10;
    }
}
BENCHMARK(BM_PendulumStep);

static void BM_TrainingEpisodePerTask(benchmark::State& state) {
    env::PendulumSuiteConfig cfg;
    cfg.masses = {0.01, 0.1, 0.5, 1.0};
    cfg.lengths = {1.0, 1.0, 0.5, 0.5};
    const env::TaskSuite suite = env::pendulum_suite(cfg);
    learn::Hyperparams hyper;
    hyper.rank = 32;
    hyper.lr.eta0 = 0.02;
    hyper.episode_length = 50;
    hyper.episodes_per_task = 1;
    const auto algo = static_cast<learn::Algorithm>(state.range(0));
    for (auto _ : state) {
        Rng rng(6);
        benchmark::DoNotOptimize(learn::run_algorithm(algo, suite, hyper, rng));
    }
    state.SetLabel(std::string(learn::to_string(algo)));
    state.SetItemsProcessed(state.iterations() * 200);
}
BENCHMARK(BM_TrainingEpisodePerTask)->DenseRange(0, 2);

BENCHMARK_MAIN();
