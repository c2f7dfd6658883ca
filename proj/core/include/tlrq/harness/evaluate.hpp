#pragma once

#include <cstddef>
#include <functional>
#include <optional>

#include "tlrq/env/environment.hpp"
#include "tlrq/learn/drivers.hpp"
#include "tlrq/rng.hpp"

namespace tlrq::harness {

/// Mean return of `episodes` episodes of length `horizon` under a fixed
/// state -> action map. Returns are undiscounted unless `discount` is given.
double evaluate_policy(const std::function<std::size_t(std::size_t)>& policy, env::Environment& env,
                       std::size_t horizon, std::size_t episodes, Rng& rng,
                       std::optional<double> discount = std::nullopt);

/// Greedy (epsilon = 0) evaluation of one task of a learner's policy.
double evaluate_policy(const learn::PolicyView& policy, std::size_t task, env::Environment& env,
                       std::size_t horizon, std::size_t episodes, Rng& rng,
                       std::optional<double> discount = std::nullopt);

}  // namespace tlrq::harness
