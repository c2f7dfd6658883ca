#pragma once

#include <memory>
#include <vector>

#include "tlrq/env/environment.hpp"
#include "tlrq/env/grid.hpp"

namespace tlrq::env {

struct PendulumParams {
    double mass = 1.0;
    double length = 1.0;
    double gravity = 9.8;
    double dt = 0.05;
    double max_torque = 2.0;
    double max_speed = 8.0;
    double friction = 0.0;  // viscous coefficient on angular velocity

    /// Throws std::invalid_argument unless all physical constants are positive
    /// and friction is non-negative.
    void validate() const;
};

/// Angle measured from upright, wrapped to (-pi, pi].
struct PendulumState {
    double theta = 0.0;
    double omega = 0.0;
};

struct PendulumStep {
    PendulumState next;
    double reward = 0.0;
};

double wrap_angle(double theta);

/// One semi-implicit Euler step: the angular velocity is updated first and
/// the new velocity moves the angle. Torque is clamped to the actuator limit
/// and the velocity to +-max_speed. Reward is the negated quadratic cost of
/// the new state and the applied torque.
PendulumStep pendulum_step(const PendulumState& state, double torque, const PendulumParams& params);

/// Mechanical energy per unit inertia, 0.5 w^2 + (3 g / 2 l) cos(theta),
/// conserved by the frictionless, unforced continuous dynamics.
double pendulum_energy(const PendulumState& state, const PendulumParams& params);

/// Pendulum over a theta x omega grid with a discrete set of torques.
/// Episodes start at theta ~ U(-pi, pi), omega ~ U(-1, 1).
class PendulumEnv final : public Environment {
public:
    PendulumEnv(PendulumParams params, std::size_t theta_bins, std::size_t omega_bins,
                std::size_t torque_levels);

    std::size_t reset(Rng& rng) override;
    StepResult step(std::size_t action, Rng& rng) override;

    [[nodiscard]] std::size_t n_states() const override { return grid_.size(); }
    [[nodiscard]] std::size_t n_actions() const override { return torques_.size(); }
    [[nodiscard]] std::unique_ptr<Environment> clone() const override {
        return std::make_unique<PendulumEnv>(*this);
    }

    [[nodiscard]] const PendulumParams& params() const { return params_; }
    [[nodiscard]] const PendulumState& state() const { return state_; }
    [[nodiscard]] const DiscretizationGrid& grid() const { return grid_; }
    [[nodiscard]] const std::vector<double>& torques() const { return torques_; }
    [[nodiscard]] std::size_t state_index() const;

private:
    PendulumParams params_;
    DiscretizationGrid grid_;
    std::vector<double> torques_;
    PendulumState state_;
};

struct PendulumSuiteConfig {
    std::vector<double> masses{0.01, 0.1, 0.5, 1.0};
    std::vector<double> lengths{1.0, 1.0, 0.5, 0.5};
    PendulumParams base;  // mass and length are overridden per task
    std::size_t theta_bins = 20;
    std::size_t omega_bins = 20;
    std::size_t torque_levels = 10;
};

/// Throws std::invalid_argument if the mass and length vectors differ in
/// length or are empty.
TaskSuite pendulum_suite(const PendulumSuiteConfig& config);

}  // namespace tlrq::env
