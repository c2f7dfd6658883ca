#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "tlrq/tensor/factor_set.hpp"

namespace tlrq::learn {

enum class ScheduleKind { constant, inverse_step };

/// eta(n) = eta0 for the constant schedule, eta0 / (1 + decay * n) for the
/// inverse-step schedule.
struct LearningRate {
    double eta0 = 0.01;
    ScheduleKind kind = ScheduleKind::constant;
    double decay = 0.0;
};

double learning_rate(const LearningRate& schedule, std::uint64_t n);

enum class Algorithm {
    stlrq,  // joint low-rank tensor over all tasks
    lrq,    // one independent low-rank model per task, M updates per sample
    clrq,   // one low-rank model shared by every task
};

std::string_view to_string(Algorithm algo);
/// Throws std::invalid_argument for unknown names.
Algorithm parse_algorithm(std::string_view name);

struct Hyperparams {
    double gamma = 0.9;
    double epsilon = 0.1;
    std::size_t rank = 0;
    /// Per-task loss weights; empty means 1 for every task.
    std::vector<double> lambdas;
    LearningRate lr;

    std::size_t episode_length = 100;
    std::size_t episodes_per_task = 1;
    /// Overrides the transition budget episodes_per_task * M * T when set.
    std::optional<std::uint64_t> iterations;

    /// Transitions between evaluations; unset means every 10 episodes.
    std::optional<std::uint64_t> eval_interval;
    std::size_t eval_episodes = 1;
    bool discounted_eval = false;

    std::uint64_t seed = 0;

    /// Per-row 2-norm cap on the semi-gradient; unset disables clipping.
    std::optional<double> grad_clip = 1.0;
    /// Bootstrap from a random action with probability epsilon instead of
    /// always from the greedy one.
    bool exploratory_target = false;
    /// Step the tasks in turn, one transition each, instead of running a
    /// full episode of each task before moving to the next.
    bool interleaved = false;
    InitKind init = InitKind::uniform01;

    [[nodiscard]] std::uint64_t total_iterations(std::size_t n_tasks) const;
    [[nodiscard]] std::uint64_t resolved_eval_interval() const;
    [[nodiscard]] double lambda(std::size_t task) const;

    /// Throws std::invalid_argument describing the first violated constraint.
    void validate(std::size_t n_tasks) const;
};

}  // namespace tlrq::learn
