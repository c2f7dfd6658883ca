#include "tlrq/env/chain.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "tlrq/contract.hpp"

namespace tlrq::env {

void ChainMdpSpec::validate() const {
    const std::size_t ns = n_states();
    const std::size_t na = n_actions();
    if (ns == 0 || na == 0) throw std::invalid_argument("chain MDP needs at least one state and one action");
    if (static_cast<std::size_t>(transitions.rows()) != ns * na ||
        static_cast<std::size_t>(transitions.cols()) != ns) {
        throw std::invalid_argument("chain MDP transition table must be (states*actions) x states");
    }
    for (Eigen::Index row = 0; row < transitions.rows(); ++row) {
        if ((transitions.row(row).array() < 0.0).any() || !transitions.row(row).allFinite()) {
            throw std::invalid_argument("chain MDP transition row " + std::to_string(row) + " has invalid entries");
        }
        const double total = transitions.row(row).sum();
        if (std::abs(total - 1.0) > 1e-12) {
            throw std::invalid_argument("chain MDP transition row " + std::to_string(row) + " sums to " +
                                        std::to_string(total) + ", not 1");
        }
    }
    if (!rewards.allFinite()) throw std::invalid_argument("chain MDP rewards must be finite");
    if (!(gamma > 0.0 && gamma < 1.0)) throw std::invalid_argument("chain MDP gamma must lie in (0, 1)");
    if (!initial.empty()) {
        if (initial.size() != ns) throw std::invalid_argument("chain MDP initial distribution has wrong size");
        const double total = std::accumulate(initial.begin(), initial.end(), 0.0);
        if (std::abs(total - 1.0) > 1e-12) throw std::invalid_argument("chain MDP initial distribution must sum to 1");
    }
}

ChainEnv::ChainEnv(ChainMdpSpec spec) : spec_(std::move(spec)) { spec_.validate(); }

void ChainEnv::set_state(std::size_t s) {
    TLRQ_EXPECTS(s < spec_.n_states());
    state_ = s;
}

std::size_t ChainEnv::reset(Rng& rng) {
    if (spec_.initial.empty()) {
        state_ = static_cast<std::size_t>(rng.below(spec_.n_states()));
        return state_;
    }
    const double u = rng.uniform01();
    double cumulative = 0.0;
    state_ = spec_.n_states() - 1;
    for (std::size_t s = 0; s < spec_.n_states(); ++s) {
        cumulative += spec_.initial[s];
        if (u < cumulative) {
            state_ = s;
            break;
        }
    }
    return state_;
}

StepResult ChainEnv::sample(std::size_t state, std::size_t action, Rng& rng) const {
    TLRQ_EXPECTS(state < spec_.n_states() && action < spec_.n_actions());
    const auto row = static_cast<Eigen::Index>(state * spec_.n_actions() + action);
    const double u = rng.uniform01();
    double cumulative = 0.0;
    // Fall back to the last state with positive mass when rounding leaves u
    // above the accumulated total.
    std::size_t next = 0;
    for (Eigen::Index s = 0; s < spec_.transitions.cols(); ++s) {
        const double p = spec_.transitions(row, s);
        if (p <= 0.0) continue;
        next = static_cast<std::size_t>(s);
        cumulative += p;
        if (u < cumulative) break;
    }
    return {next, spec_.rewards(static_cast<Eigen::Index>(state), static_cast<Eigen::Index>(action)), false};
}

StepResult ChainEnv::step(std::size_t action, Rng& rng) {
    const StepResult out = sample(state_, action, rng);
    state_ = out.next_state;
    return out;
}

ChainMdpSpec five_state_chain(double gamma) {
    constexpr std::size_t ns = 5;
    constexpr std::size_t na = 2;
    ChainMdpSpec spec;
    spec.gamma = gamma;
    spec.transitions = Matrix::Zero(ns * na, ns);
    spec.rewards = Matrix::Zero(ns, na);
    for (std::size_t s = 0; s < ns; ++s) {
        const std::size_t left = s == 0 ? 0 : s - 1;
        const std::size_t right = s + 1 == ns ? s : s + 1;
        spec.transitions(static_cast<Eigen::Index>(s * na + 0), static_cast<Eigen::Index>(left)) += 0.9;
        spec.transitions(static_cast<Eigen::Index>(s * na + 0), static_cast<Eigen::Index>(s)) += 0.1;
        spec.transitions(static_cast<Eigen::Index>(s * na + 1), static_cast<Eigen::Index>(right)) += 0.9;
        spec.transitions(static_cast<Eigen::Index>(s * na + 1), static_cast<Eigen::Index>(s)) += 0.1;
    }
    spec.rewards(0, 0) = 0.7;
    spec.rewards(ns - 1, 1) = 1.0;
    spec.validate();
    return spec;
}

TaskSuite chain_suite(const std::vector<ChainMdpSpec>& specs) {
    std::vector<std::unique_ptr<Environment>> tasks;
    for (const auto& spec : specs) tasks.push_back(std::make_unique<ChainEnv>(spec));
    return TaskSuite(std::move(tasks));
}

}  // namespace tlrq::env
