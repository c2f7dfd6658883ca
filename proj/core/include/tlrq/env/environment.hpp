#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "tlrq/rng.hpp"
#include "tlrq/tensor/factor_set.hpp"

namespace tlrq::env {

struct StepResult {
    std::size_t next_state = 0;
    double reward = 0.0;
    bool done = false;
};

/// Episodic finite MDP seen through flat state and action indices.
///
/// Environments keep their own (possibly continuous) internal state between
/// reset() and step(); all randomness is drawn from the Rng the caller
/// passes, so identical parameters and streams give identical trajectories.
class Environment {
public:
    virtual ~Environment() = default;

    virtual std::size_t reset(Rng& rng) = 0;
    virtual StepResult step(std::size_t action, Rng& rng) = 0;

    [[nodiscard]] virtual std::size_t n_states() const = 0;
    [[nodiscard]] virtual std::size_t n_actions() const = 0;
    [[nodiscard]] virtual std::unique_ptr<Environment> clone() const = 0;
};

/// M environments over one shared state space and one shared action space.
class TaskSuite {
public:
    TaskSuite() = default;
    /// Throws std::invalid_argument if empty or if state/action counts differ.
    explicit TaskSuite(std::vector<std::unique_ptr<Environment>> tasks);

    TaskSuite(const TaskSuite& other);
    TaskSuite& operator=(const TaskSuite& other);
    TaskSuite(TaskSuite&&) noexcept = default;
    TaskSuite& operator=(TaskSuite&&) noexcept = default;

    [[nodiscard]] std::size_t size() const { return tasks_.size(); }
    [[nodiscard]] std::size_t n_states() const { return tasks_.front()->n_states(); }
    [[nodiscard]] std::size_t n_actions() const { return tasks_.front()->n_actions(); }
    [[nodiscard]] Dims dims() const { return {n_states(), n_actions(), size()}; }

    Environment& operator[](std::size_t m) { return *tasks_.at(m); }
    const Environment& operator[](std::size_t m) const { return *tasks_.at(m); }

private:
    std::vector<std::unique_ptr<Environment>> tasks_;
};

}  // namespace tlrq::env
