#include "tlrq/oracle/finite_diff.hpp"

#include <algorithm>
#include <cmath>

#include "tlrq/contract.hpp"
#include "tlrq/rng.hpp"

namespace tlrq::oracle {

namespace {

double frozen_target(const FactorSet& fs, const learn::Transition& t, double gamma) {
    double best = evaluate(fs, t.next_state, 0, t.task);
    for (std::size_t a = 1; a < fs.dims().n_actions; ++a) best = std::max(best, evaluate(fs, t.next_state, a, t.task));
    return t.reward + gamma * best;
}

double loss(const FactorSet& fs, const learn::Transition& t, double target, double lambda_m) {
    const double r = target - evaluate(fs, t.state, t.action, t.task);
    return lambda_m * r * r;
}

FactorSet perturbed(const FactorSet& fs, Mode mode, std::size_t row, std::size_t col, double delta) {
    FactorSet out = fs;
    const auto c = static_cast<Eigen::Index>(col);
    switch (mode) {
        case Mode::states: out.state_row(row)(c) += delta; break;
        case Mode::actions: out.action_row(row)(c) += delta; break;
        case Mode::tasks: out.task_row(row)(c) += delta; break;
    }
    return out;
}

double central(const FactorSet& fs, const learn::Transition& t, double target, double lambda_m, Mode mode,
               std::size_t row, std::size_t col, double h) {
    const double plus = loss(perturbed(fs, mode, row, col, h), t, target, lambda_m);
    const double minus = loss(perturbed(fs, mode, row, col, -h), t, target, lambda_m);
    return (plus - minus) / (2.0 * h);
}

}  // namespace

DenseRowGrads finite_diff_semigrad(const FactorSet& fs, const learn::Transition& t, double gamma,
                                   double lambda_m, double h) {
    TLRQ_EXPECTS(h > 0.0);
    const double target = frozen_target(fs, t, gamma);
    const std::size_t k = fs.rank();
    DenseRowGrads g{Eigen::VectorXd(k), Eigen::VectorXd(k), Eigen::VectorXd(k)};
    for (std::size_t c = 0; c < k; ++c) {
        const auto i = static_cast<Eigen::Index>(c);
        g.state(i) = central(fs, t, target, lambda_m, Mode::states, t.state, c, h);
        g.action(i) = central(fs, t, target, lambda_m, Mode::actions, t.action, c, h);
        g.task(i) = central(fs, t, target, lambda_m, Mode::tasks, t.task, c, h);
    }
    return g;
}

double finite_diff_entry(const FactorSet& fs, const learn::Transition& t, double gamma, double lambda_m, Mode mode,
                         std::size_t row, std::size_t col, double h) {
    TLRQ_EXPECTS(h > 0.0);
    return central(fs, t, frozen_target(fs, t, gamma), lambda_m, mode, row, col, h);
}

double relative_error(double analytic, double numeric) {
    return std::abs(analytic - numeric) / std::max(1.0, std::abs(analytic));
}

GradCheckReport random_gradcheck(std::size_t instances, std::uint64_t seed, double gamma, double h) {
    Rng rng(seed);
    GradCheckReport report;
    for (std::size_t i = 0; i < instances; ++i) {
        const Dims d{1 + rng.below(8), 1 + rng.below(8), 1 + rng.below(4)};
        const std::size_t rank = 1 + rng.below(4);
        const FactorSet fs = new_factor_set(d, rank, rng.next());
        learn::Transition t;
        t.task = rng.below(d.n_tasks);
        t.state = rng.below(d.n_states);
        t.action = rng.below(d.n_actions);
        t.next_state = rng.below(d.n_states);
        t.reward = rng.uniform(-1.0, 1.0);
        const double lambda = rng.uniform(0.5, 2.0);

        const learn::SparseGrad analytic = learn::semi_gradients(fs, t, gamma, lambda);
        const DenseRowGrads numeric = finite_diff_semigrad(fs, t, gamma, lambda, h);
        for (std::size_t c = 0; c < rank; ++c) {
            const auto k = static_cast<Eigen::Index>(c);
            report.max_relative_error = std::max({report.max_relative_error,
                                                  relative_error(analytic.state.values(k), numeric.state(k)),
                                                  relative_error(analytic.action.values(k), numeric.action(k)),
                                                  relative_error(analytic.task.values(k), numeric.task(k))});
            report.components += 3;
        }
        ++report.instances;
    }
    return report;
}

}  // namespace tlrq::oracle
