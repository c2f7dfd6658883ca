#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Core>

#include "tlrq/learn/hyperparams.hpp"
#include "tlrq/rng.hpp"
#include "tlrq/tensor/factor_set.hpp"

namespace tlrq::learn {

/// One sampled step (s, a, r, s') of task `task`.
struct Transition {
    std::size_t task = 0;
    std::size_t state = 0;
    std::size_t action = 0;
    double reward = 0.0;
    std::size_t next_state = 0;
};

/// Transitions bucketed by task; bucket m holds only task-m samples.
using TrajectorySet = std::vector<std::vector<Transition>>;

struct RowGrad {
    std::size_t row = 0;
    Eigen::VectorXd values;
};

/// Semi-gradient of one transition. Only the visited state row, the taken
/// action row and the task row are non-zero.
struct SparseGrad {
    RowGrad state;
    RowGrad action;
    RowGrad task;
};

/// r + gamma * max_a Q(s', a, m), the bootstrapped target.
double td_target(const FactorSet& fs, const Transition& t, double gamma);

/// target - Q(s, a, m).
double td_error(const FactorSet& fs, const Transition& t, double gamma);

/// Gradient of lambda_m * (target - Q(s, a, m))^2 with the target held fixed,
/// given the residual delta = target - Q(s, a, m):
///
///   state row s,  column k: -2 lambda delta actions(a,k) tasks(m,k)
///   action row a, column k: -2 lambda delta states(s,k) tasks(m,k)
///   task row m,   column k: -2 lambda delta states(s,k) actions(a,k)
SparseGrad semi_gradients_from_residual(const FactorSet& fs, const Transition& t, double delta,
                                        double lambda_m);

SparseGrad semi_gradients(const FactorSet& fs, const Transition& t, double gamma, double lambda_m);

/// Rescales each touched row whose 2-norm exceeds max_norm down to max_norm.
void clip_rows(SparseGrad& g, double max_norm);

/// fs -= eta * g on the three touched rows only. All three rows of g must
/// have been computed from the same (pre-update) factors.
void apply_update(FactorSet& fs, const SparseGrad& g, double eta);

/// Epsilon-greedy behaviour: with probability epsilon a uniformly random
/// action (the greedy one included), otherwise the greedy action.
std::size_t select_action(const FactorSet& fs, std::size_t state, std::size_t task, double epsilon,
                          Rng& rng);

/// sum_m lambda_m sum_l delta_l^2 over the whole data set. Throws
/// std::invalid_argument if the set holds no transitions or a transition
/// sits in the wrong bucket.
double batch_loss(const FactorSet& fs, const TrajectorySet& data, const Hyperparams& hyper);

}  // namespace tlrq::learn
