#pragma once

#include <memory>
#include <vector>

#include "tlrq/env/environment.hpp"
#include "tlrq/tensor/factor_set.hpp"

namespace tlrq::env {

/// Finite MDP given by explicit tables.
///
/// transitions has one row per (state, action) pair, row s * n_actions + a,
/// holding P(. | s, a). rewards is n_states x n_actions. An empty `initial`
/// means episodes start uniformly over states.
struct ChainMdpSpec {
    Matrix transitions;
    Matrix rewards;
    double gamma = 0.9;
    std::vector<double> initial;

    [[nodiscard]] std::size_t n_states() const { return static_cast<std::size_t>(rewards.rows()); }
    [[nodiscard]] std::size_t n_actions() const { return static_cast<std::size_t>(rewards.cols()); }
    [[nodiscard]] double probability(std::size_t s, std::size_t a, std::size_t next) const {
        return transitions(static_cast<Eigen::Index>(s * n_actions() + a), static_cast<Eigen::Index>(next));
    }

    /// Throws std::invalid_argument on shape mismatch, negative or
    /// non-stochastic rows (tolerance 1e-12), non-finite rewards, or
    /// gamma outside (0, 1).
    void validate() const;
};

class ChainEnv final : public Environment {
public:
    explicit ChainEnv(ChainMdpSpec spec);

    std::size_t reset(Rng& rng) override;
    StepResult step(std::size_t action, Rng& rng) override;

    /// Stateless transition draw from (state, action).
    StepResult sample(std::size_t state, std::size_t action, Rng& rng) const;

    [[nodiscard]] std::size_t n_states() const override { return spec_.n_states(); }
    [[nodiscard]] std::size_t n_actions() const override { return spec_.n_actions(); }
    [[nodiscard]] std::unique_ptr<Environment> clone() const override { return std::make_unique<ChainEnv>(*this); }

    [[nodiscard]] const ChainMdpSpec& spec() const { return spec_; }
    [[nodiscard]] std::size_t state() const { return state_; }
    void set_state(std::size_t s);

private:
    ChainMdpSpec spec_;
    std::size_t state_ = 0;
};

/// Five states in a line with two actions (0 = left, 1 = right). A move
/// succeeds with probability 0.9 and otherwise leaves the state unchanged.
/// Pushing left at the left end pays 0.7 and pushing right at the right end
/// pays 1.0; everything else pays 0. Optimal play under gamma = 0.9 is left
/// in state 0 and right elsewhere.
ChainMdpSpec five_state_chain(double gamma = 0.9);

TaskSuite chain_suite(const std::vector<ChainMdpSpec>& specs);

}  // namespace tlrq::env
