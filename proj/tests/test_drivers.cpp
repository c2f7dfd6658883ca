#include <gtest/gtest.h>

#include <vector>

#include "tlrq/env/chain.hpp"
#include "tlrq/env/pendulum.hpp"
#include "tlrq/learn/drivers.hpp"

using namespace tlrq;
using namespace tlrq::learn;

namespace {

Hyperparams small_hyper() {
    Hyperparams h;
    h.rank = 2;
    h.epsilon = 0.2;
    h.episode_length = 10;
    h.episodes_per_task = 5;
    h.eval_interval = 25;
    h.seed = 3;
    h.lr.eta0 = 0.05;
    return h;
}

env::TaskSuite small_pendulum(std::size_t tasks) {
    env::PendulumSuiteConfig cfg;
    cfg.masses.assign(tasks, 0.5);
    cfg.lengths.assign(tasks, 1.0);
    for (std::size_t m = 0; m < tasks; ++m) cfg.masses[m] = 0.2 + 0.3 * static_cast<double>(m);
    cfg.theta_bins = 6;
    cfg.omega_bins = 5;
    cfg.torque_levels = 3;
    return env::pendulum_suite(cfg);
}

}  // namespace

TEST(RunStlrq, ZeroBudgetLeavesInitialModel) {
    Hyperparams h = small_hyper();
    h.iterations = 0;
    h.eval_interval = 1;
    Rng rng(1);
    const RunOutput out = run_stlrq(small_pendulum(2), h, rng);
    ASSERT_EQ(out.models.size(), 1u);
    EXPECT_EQ(out.models[0], new_factor_set({30, 3, 2}, 2, h.seed));
    EXPECT_EQ(out.transitions, 0u);
}

TEST(RunStlrq, BudgetAndCheckpointCadence) {
    const Hyperparams h = small_hyper();  // N = 5 * 2 * 10 = 100, interval 25
    std::vector<std::uint64_t> seen;
    Rng rng(1);
    const RunOutput out = run_stlrq(small_pendulum(2), h, rng, [&](std::uint64_t n, const PolicyView& view) {
        EXPECT_EQ(view.n_tasks(), 2u);
        seen.push_back(n);
    });
    EXPECT_EQ(out.transitions, 100u);
    EXPECT_EQ(out.updates, 100u);
    EXPECT_EQ(seen, (std::vector<std::uint64_t>{0, 25, 50, 75, 100}));
}

TEST(RunStlrq, FinalCheckpointWhenIntervalDoesNotDivide) {
    Hyperparams h = small_hyper();
    h.eval_interval = 30;
    std::vector<std::uint64_t> seen;
    Rng rng(1);
    run_stlrq(small_pendulum(2), h, rng, [&](std::uint64_t n, const PolicyView&) { seen.push_back(n); });
    EXPECT_EQ(seen, (std::vector<std::uint64_t>{0, 30, 60, 90, 100}));
}

TEST(RunStlrq, DefaultIntervalLongerThanBudget) {
    Hyperparams h = small_hyper();
    h.eval_interval.reset();  // 10 episodes = 100 transitions
    h.episodes_per_task = 2;  // N = 40
    std::vector<std::uint64_t> seen;
    Rng rng(1);
    run_stlrq(small_pendulum(2), h, rng, [&](std::uint64_t n, const PolicyView&) { seen.push_back(n); });
    EXPECT_EQ(seen, (std::vector<std::uint64_t>{0, 40}));
}

TEST(RunStlrq, Deterministic) {
    const Hyperparams h = small_hyper();
    Rng a(7), b(7);
    EXPECT_EQ(run_stlrq(small_pendulum(3), h, a).models[0], run_stlrq(small_pendulum(3), h, b).models[0]);
}

TEST(RunStlrq, InterleavedScheduleRunsFullBudget) {
    Hyperparams h = small_hyper();
    h.interleaved = true;
    Rng rng(2);
    const RunOutput out = run_stlrq(small_pendulum(3), h, rng);
    EXPECT_EQ(out.transitions, 150u);
    Rng again(2);
    EXPECT_FALSE(run_stlrq(small_pendulum(3), small_hyper(), again).models[0] == out.models[0]);
}

TEST(RunLrq, AppliesMUpdatesPerTransition) {
    const Hyperparams h = small_hyper();
    Rng rng(1);
    const RunOutput out = run_lrq(small_pendulum(3), h, rng);
    ASSERT_EQ(out.models.size(), 3u);
    EXPECT_EQ(out.transitions, 150u);
    EXPECT_EQ(out.updates, 3u * out.transitions);
    for (const FactorSet& m : out.models) EXPECT_EQ(m.dims(), (Dims{30, 3, 1}));
}

TEST(RunLrq, SingleTaskMatchesStlrq) {
    // With M = 1 both learners apply one update per transition to the same
    // model drawn from the same seed, so their trajectories coincide.
    const Hyperparams h = small_hyper();
    Rng a(9), b(9);
    const RunOutput joint = run_stlrq(small_pendulum(1), h, a);
    const RunOutput separate = run_lrq(small_pendulum(1), h, b);
    EXPECT_EQ(joint.models[0], separate.models[0]);
}

TEST(RunClrq, SingleTaskMatchesLrq) {
    const Hyperparams h = small_hyper();
    Rng a(4), b(4);
    EXPECT_EQ(run_clrq(small_pendulum(1), h, a).models[0], run_lrq(small_pendulum(1), h, b).models[0]);
}

TEST(RunLrq, TasksAreIndependent) {
    // Model m depends only on task m's data: changing task 1's dynamics leaves
    // model 0 untouched.
    const Hyperparams h = small_hyper();
    env::TaskSuite base = small_pendulum(2);
    env::PendulumSuiteConfig other;
    other.masses = {0.2, 5.0};
    other.lengths = {1.0, 0.3};
    other.theta_bins = 6;
    other.omega_bins = 5;
    other.torque_levels = 3;
    Rng a(5), b(5);
    const RunOutput x = run_lrq(base, h, a);
    const RunOutput y = run_lrq(env::pendulum_suite(other), h, b);
    EXPECT_EQ(x.models[0], y.models[0]);
    EXPECT_FALSE(x.models[1] == y.models[1]);
}

TEST(RunClrq, OneSharedModel) {
    const Hyperparams h = small_hyper();
    Rng rng(1);
    std::size_t rows = 99;
    const RunOutput out = run_clrq(small_pendulum(3), h, rng, [&](std::uint64_t, const PolicyView& v) {
        rows = v.row(2);
        EXPECT_EQ(&v.model(0), &v.model(2));
    });
    ASSERT_EQ(out.models.size(), 1u);
    EXPECT_EQ(out.models[0].dims(), (Dims{30, 3, 1}));
    EXPECT_EQ(out.updates, out.transitions);
    EXPECT_EQ(rows, 0u);
}

TEST(RunAlgorithm, ValidatesHyperparams) {
    Hyperparams h = small_hyper();
    h.rank = 0;
    Rng rng(1);
    EXPECT_THROW(run_algorithm(Algorithm::stlrq, small_pendulum(2), h, rng), std::invalid_argument);
}

TEST(PolicyView, JointReadsTaskRow) {
    const FactorSet fs = new_factor_set({4, 3, 2}, 2, 1, InitKind::symmetric);
    const PolicyView v = PolicyView::joint(fs);
    for (std::size_t m = 0; m < 2; ++m)
        for (std::size_t s = 0; s < 4; ++s) EXPECT_EQ(v.greedy(m, s), greedy_action(fs, s, m).action);
}
