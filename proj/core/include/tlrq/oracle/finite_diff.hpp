#pragma once

#include <cstddef>
#include <cstdint>

#include <Eigen/Core>

#include "tlrq/learn/semigrad.hpp"
#include "tlrq/tensor/factor_set.hpp"

namespace tlrq::oracle {

enum class Mode { states, actions, tasks };

/// Central-difference gradient rows of the frozen-target loss
///   L = lambda_m * (target - Q(s, a, m))^2,
/// where target = r + gamma * max_a' Q(s', a', m) is computed once from the
/// unperturbed factors. Rows are the visited state row, the taken action
/// row and the task row.
struct DenseRowGrads {
    Eigen::VectorXd state;
    Eigen::VectorXd action;
    Eigen::VectorXd task;
};

DenseRowGrads finite_diff_semigrad(const FactorSet& fs, const learn::Transition& t, double gamma,
                                   double lambda_m, double h = 1e-5);

/// Central difference of the frozen-target loss for one arbitrary entry.
double finite_diff_entry(const FactorSet& fs, const learn::Transition& t, double gamma, double lambda_m, Mode mode,
                         std::size_t row, std::size_t col, double h = 1e-5);

/// |analytic - numeric| / max(1, |analytic|).
double relative_error(double analytic, double numeric);

struct GradCheckReport {
    std::size_t instances = 0;
    std::size_t components = 0;
    double max_relative_error = 0.0;
};

/// Compares learn::semi_gradients against finite_diff_semigrad on random
/// instances: dims up to (8, 8, 4), rank up to 4, U[0,1) factors, random
/// transition, reward in [-1, 1), lambda in [0.5, 2).
GradCheckReport random_gradcheck(std::size_t instances, std::uint64_t seed, double gamma = 0.9, double h = 1e-5);

}  // namespace tlrq::oracle
