#include "tlrq/learn/semigrad.hpp"

#include <stdexcept>

#include "tlrq/contract.hpp"

namespace tlrq::learn {

double td_target(const FactorSet& fs, const Transition& t, double gamma) {
    return t.reward + gamma * greedy_action(fs, t.next_state, t.task).value;
}

double td_error(const FactorSet& fs, const Transition& t, double gamma) {
    return td_target(fs, t, gamma) - evaluate(fs, t.state, t.action, t.task);
}

SparseGrad semi_gradients_from_residual(const FactorSet& fs, const Transition& t, double delta,
                                        double lambda_m) {
    const Dims d = fs.dims();
    TLRQ_EXPECTS(t.state < d.n_states && t.action < d.n_actions && t.task < d.n_tasks);
    const auto s_row = fs.states().row(static_cast<Eigen::Index>(t.state));
    const auto a_row = fs.actions().row(static_cast<Eigen::Index>(t.action));
    const auto m_row = fs.tasks().row(static_cast<Eigen::Index>(t.task));
    const double scale = -2.0 * lambda_m * delta;

    SparseGrad g;
    g.state = {t.state, scale * a_row.cwiseProduct(m_row).transpose()};
    g.action = {t.action, scale * s_row.cwiseProduct(m_row).transpose()};
    g.task = {t.task, scale * s_row.cwiseProduct(a_row).transpose()};
    return g;
}

SparseGrad semi_gradients(const FactorSet& fs, const Transition& t, double gamma, double lambda_m) {
    return semi_gradients_from_residual(fs, t, td_error(fs, t, gamma), lambda_m);
}

void clip_rows(SparseGrad& g, double max_norm) {
    for (RowGrad* r : {&g.state, &g.action, &g.task}) {
        const double norm = r->values.norm();
        if (norm > max_norm) r->values *= max_norm / norm;
    }
}

void apply_update(FactorSet& fs, const SparseGrad& g, double eta) {
    TLRQ_EXPECTS(eta >= 0.0);
    if (eta == 0.0) return;
    fs.state_row(g.state.row) -= eta * g.state.values.transpose();
    fs.action_row(g.action.row) -= eta * g.action.values.transpose();
    fs.task_row(g.task.row) -= eta * g.task.values.transpose();
}

std::size_t select_action(const FactorSet& fs, std::size_t state, std::size_t task, double epsilon,
                          Rng& rng) {
    TLRQ_EXPECTS(epsilon >= 0.0 && epsilon <= 1.0);
    if (rng.uniform01() < epsilon) return static_cast<std::size_t>(rng.below(fs.dims().n_actions));
    return greedy_action(fs, state, task).action;
}

double batch_loss(const FactorSet& fs, const TrajectorySet& data, const Hyperparams& hyper) {
    double total = 0.0;
    std::size_t count = 0;
    for (std::size_t m = 0; m < data.size(); ++m) {
        double task_sum = 0.0;
        for (const Transition& t : data[m]) {
            if (t.task != m) throw std::invalid_argument("transition filed under the wrong task bucket");
            const double delta = td_error(fs, t, hyper.gamma);
            task_sum += delta * delta;
            ++count;
        }
        if (!data[m].empty()) total += hyper.lambda(m) * task_sum;
    }
    if (count == 0) throw std::invalid_argument("batch_loss needs at least one transition");
    return total;
}

}  // namespace tlrq::learn
