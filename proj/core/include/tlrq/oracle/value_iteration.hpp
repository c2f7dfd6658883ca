#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>

#include "tlrq/env/chain.hpp"
#include "tlrq/tensor/factor_set.hpp"

namespace tlrq::oracle {

/// Tabular |S| x |A| action-value function.
using DenseQ = Matrix;

/// Raised when value iteration exhausts its sweep budget.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(std::size_t sweeps, double last_change);
    [[nodiscard]] std::size_t sweeps() const { return sweeps_; }
    [[nodiscard]] double last_change() const { return last_change_; }

private:
    std::size_t sweeps_;
    double last_change_;
};

struct ValueIterationResult {
    DenseQ q;
    std::size_t sweeps = 0;
};

/// Observer invoked with (sweep index j, Q_j) for j = 0 (all zeros) onwards.
using IterateObserver = std::function<void(std::size_t, const DenseQ&)>;

/// Bellman optimality sweeps from Q_0 = 0,
///   Q_{j+1}(s,a) = r(s,a) + gamma sum_s' P(s'|s,a) max_a' Q_j(s',a'),
/// until the sup-norm change drops below tol. Throws ConvergenceError if
/// max_sweeps is reached first and std::invalid_argument for tol <= 0.
ValueIterationResult value_iteration(const env::ChainMdpSpec& spec, double tol = 1e-10,
                                     std::size_t max_sweeps = 100000, const IterateObserver& observer = {});

/// Fraction of states whose greedy action under task `task` of `fs` attains
/// max_a qstar(s, a) within 1e-9. Ties in qstar count as matches for any
/// tied action.
double policy_match(const FactorSet& fs, std::size_t task, const DenseQ& qstar);

/// Same measure for an arbitrary state -> action map.
double policy_match(const std::function<std::size_t(std::size_t)>& policy, const DenseQ& qstar);

}  // namespace tlrq::oracle
