#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "tlrq/env/environment.hpp"
#include "tlrq/learn/hyperparams.hpp"
#include "tlrq/learn/semigrad.hpp"
#include "tlrq/rng.hpp"
#include "tlrq/tensor/factor_set.hpp"

namespace tlrq::learn {

/// Read-only view that maps (task, state) to a greedy action, whichever
/// way the learner lays out its models.
class PolicyView {
public:
    /// Task m reads row m of one joint model.
    static PolicyView joint(const FactorSet& fs);
    /// Task m reads row 0 of its own model.
    static PolicyView per_task(std::span<const FactorSet> models);
    /// Every task reads row 0 of a single shared model.
    static PolicyView shared(const FactorSet& fs, std::size_t n_tasks);

    [[nodiscard]] std::size_t n_tasks() const { return n_tasks_; }
    [[nodiscard]] const FactorSet& model(std::size_t task) const;
    [[nodiscard]] std::size_t row(std::size_t task) const;
    [[nodiscard]] std::size_t greedy(std::size_t task, std::size_t state) const;

private:
    enum class Layout { joint, per_task, shared };
    PolicyView(Layout layout, std::span<const FactorSet> models, std::size_t n_tasks)
        : layout_(layout), models_(models), n_tasks_(n_tasks) {}

    Layout layout_;
    std::span<const FactorSet> models_;
    std::size_t n_tasks_;
};

/// Called with n = 0 before training, after every eval_interval
/// transitions, and once more at n = N.
using CheckpointSink = std::function<void(std::uint64_t iteration, const PolicyView& policy)>;

struct RunOutput {
    std::vector<FactorSet> models;
    std::uint64_t transitions = 0;
    /// Semi-gradient steps applied; equals M * transitions for LR-Q.
    std::uint64_t updates = 0;
};

/// Joint multi-task learner: one rank-K model over (state, action, task).
///
/// Visits tasks in turn, running one episode of T steps for each, sampling
/// with epsilon-greedy behaviour from the current model and applying one
/// block update (state, action and task rows together) per transition,
/// until N transitions have been taken. `rng` drives behaviour; each
/// task's environment gets its own stream derived from it.
RunOutput run_stlrq(const env::TaskSuite& suite, const Hyperparams& hyper, Rng& rng,
                    const CheckpointSink& sink = {});

/// Independent per-task models (task mode of size 1). Every transition of
/// task m is replayed for M consecutive updates of model m so the compute
/// budget matches the joint learner.
RunOutput run_lrq(const env::TaskSuite& suite, const Hyperparams& hyper, Rng& rng,
                  const CheckpointSink& sink = {});

/// One model with a task mode of size 1, trained on every task's data and
/// used unchanged for every task.
RunOutput run_clrq(const env::TaskSuite& suite, const Hyperparams& hyper, Rng& rng,
                   const CheckpointSink& sink = {});

RunOutput run_algorithm(Algorithm algo, const env::TaskSuite& suite, const Hyperparams& hyper, Rng& rng,
                        const CheckpointSink& sink = {});

}  // namespace tlrq::learn
