#include "tlrq/oracle/value_iteration.hpp"

#include <cmath>
#include <string>

#include "tlrq/contract.hpp"

namespace tlrq::oracle {

ConvergenceError::ConvergenceError(std::size_t sweeps, double last_change)
    : std::runtime_error("value iteration did not converge after " + std::to_string(sweeps) +
                         " sweeps (last change " + std::to_string(last_change) + ")"),
      sweeps_(sweeps),
      last_change_(last_change) {}

ValueIterationResult value_iteration(const env::ChainMdpSpec& spec, double tol, std::size_t max_sweeps,
                                     const IterateObserver& observer) {
    spec.validate();
    if (!(tol > 0.0)) throw std::invalid_argument("value iteration tolerance must be positive");
    const auto ns = static_cast<Eigen::Index>(spec.n_states());
    const auto na = static_cast<Eigen::Index>(spec.n_actions());

    DenseQ q = DenseQ::Zero(ns, na);
    if (observer) observer(0, q);
    double change = 0.0;
    for (std::size_t sweep = 1; sweep <= max_sweeps; ++sweep) {
        const Eigen::VectorXd v = q.rowwise().maxCoeff();
        const Eigen::VectorXd expected = spec.transitions * v;  // row s*na + a
        DenseQ next(ns, na);
        for (Eigen::Index s = 0; s < ns; ++s) {
            for (Eigen::Index a = 0; a < na; ++a) next(s, a) = spec.rewards(s, a) + spec.gamma * expected(s * na + a);
        }
        change = (next - q).cwiseAbs().maxCoeff();
        q = std::move(next);
        if (observer) observer(sweep, q);
        if (change < tol) return {q, sweep};
    }
    throw ConvergenceError(max_sweeps, change);
}

double policy_match(const std::function<std::size_t(std::size_t)>& policy, const DenseQ& qstar) {
    const auto ns = qstar.rows();
    if (ns == 0) return 1.0;
    std::size_t hits = 0;
    for (Eigen::Index s = 0; s < ns; ++s) {
        const std::size_t a = policy(static_cast<std::size_t>(s));
        TLRQ_EXPECTS(a < static_cast<std::size_t>(qstar.cols()));
        if (qstar(s, static_cast<Eigen::Index>(a)) >= qstar.row(s).maxCoeff() - 1e-9) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(ns);
}

double policy_match(const FactorSet& fs, std::size_t task, const DenseQ& qstar) {
    const Dims d = fs.dims();
    TLRQ_EXPECTS(d.n_states == static_cast<std::size_t>(qstar.rows()) &&
                 d.n_actions == static_cast<std::size_t>(qstar.cols()) && task < d.n_tasks);
    return policy_match([&](std::size_t s) { return greedy_action(fs, s, task).action; }, qstar);
}

}  // namespace tlrq::oracle
