#include <stdexcept>

#include "tlrq/env/environment.hpp"

namespace tlrq::env {

TaskSuite::TaskSuite(std::vector<std::unique_ptr<Environment>> tasks) : tasks_(std::move(tasks)) {
    if (tasks_.empty()) throw std::invalid_argument("task suite needs at least one task");
    for (const auto& t : tasks_) {
        if (!t) throw std::invalid_argument("task suite entries must be non-null");
        if (t->n_states() != tasks_.front()->n_states() || t->n_actions() != tasks_.front()->n_actions()) {
            throw std::invalid_argument("all tasks in a suite must share state and action spaces");
        }
    }
}

TaskSuite::TaskSuite(const TaskSuite& other) {
    tasks_.reserve(other.tasks_.size());
    for (const auto& t : other.tasks_) tasks_.push_back(t->clone());
}

TaskSuite& TaskSuite::operator=(const TaskSuite& other) {
    if (this != &other) {
        TaskSuite copy(other);
        *this = std::move(copy);
    }
    return *this;
}

}  // namespace tlrq::env
