#include "tlrq/learn/hyperparams.hpp"

#include <stdexcept>
#include <string>

namespace tlrq::learn {

double learning_rate(const LearningRate& schedule, std::uint64_t n) {
    switch (schedule.kind) {
        case ScheduleKind::constant:
            return schedule.eta0;
        case ScheduleKind::inverse_step:
            return schedule.eta0 / (1.0 + schedule.decay * static_cast<double>(n));
    }
    return schedule.eta0;
}

std::string_view to_string(Algorithm algo) {
    switch (algo) {
        case Algorithm::stlrq: return "stlrq";
        case Algorithm::lrq: return "lrq";
        case Algorithm::clrq: return "clrq";
    }
    return "unknown";
}

Algorithm parse_algorithm(std::string_view name) {
    if (name == "stlrq") return Algorithm::stlrq;
    if (name == "lrq") return Algorithm::lrq;
    if (name == "clrq") return Algorithm::clrq;
    throw std::invalid_argument("unknown algorithm '" + std::string(name) + "' (expected stlrq, lrq or clrq)");
}

std::uint64_t Hyperparams::total_iterations(std::size_t n_tasks) const {
    if (iterations) return *iterations;
    return static_cast<std::uint64_t>(episodes_per_task) * n_tasks * episode_length;
}

std::uint64_t Hyperparams::resolved_eval_interval() const {
    return eval_interval.value_or(10 * static_cast<std::uint64_t>(episode_length));
}

double Hyperparams::lambda(std::size_t task) const {
    return lambdas.empty() ? 1.0 : lambdas.at(task);
}

void Hyperparams::validate(std::size_t n_tasks) const {
    auto fail = [](const std::string& what) { throw std::invalid_argument("hyperparams: " + what); };
    if (!(gamma > 0.0 && gamma < 1.0)) fail("gamma must lie in (0, 1)");
    if (!(epsilon >= 0.0 && epsilon <= 1.0)) fail("epsilon must lie in [0, 1]");
    if (rank == 0) fail("rank must be at least 1");
    if (!lambdas.empty()) {
        if (lambdas.size() != n_tasks) {
            fail("expected " + std::to_string(n_tasks) + " task weights, got " + std::to_string(lambdas.size()));
        }
        for (double l : lambdas) {
            if (!(l > 0.0)) fail("task weights must be positive");
        }
    }
    if (!(lr.eta0 > 0.0)) fail("eta0 must be positive");
    if (!(lr.decay >= 0.0)) fail("learning-rate decay must be non-negative");
    if (episode_length == 0) fail("episode_length must be positive");
    if (episodes_per_task == 0 && !iterations) fail("episodes_per_task must be positive");
    if (resolved_eval_interval() == 0) fail("eval_interval must be positive");
    const std::uint64_t n = total_iterations(n_tasks);
    if (eval_interval && n > 0 && *eval_interval > n) fail("eval_interval exceeds the transition budget");
    if (eval_episodes == 0) fail("eval_episodes must be positive");
    if (grad_clip && !(*grad_clip > 0.0)) fail("grad_clip must be positive when set");
}

}  // namespace tlrq::learn
