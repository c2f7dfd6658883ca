#include "tlrq/env/pendulum.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "tlrq/contract.hpp"

namespace tlrq::env {

void PendulumParams::validate() const {
    if (!(mass > 0 && length > 0 && gravity > 0 && dt > 0 && max_torque > 0 && max_speed > 0)) {
        throw std::invalid_argument("pendulum mass, length, gravity, dt, max_torque and max_speed must be positive");
    }
    if (!(friction >= 0)) throw std::invalid_argument("pendulum friction must be non-negative");
}

double wrap_angle(double theta) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    return theta - two_pi * std::ceil((theta - std::numbers::pi) / two_pi);
}

PendulumStep pendulum_step(const PendulumState& state, double torque, const PendulumParams& p) {
    const double u = std::clamp(torque, -p.max_torque, p.max_torque);
    const double accel = 3.0 * p.gravity / (2.0 * p.length) * std::sin(state.theta) +
                         3.0 / (p.mass * p.length * p.length) * u - p.friction * state.omega;
    const double omega = std::clamp(state.omega + p.dt * accel, -p.max_speed, p.max_speed);
    const double theta = wrap_angle(state.theta + p.dt * omega);
    const double cost = theta * theta + 0.1 * omega * omega + 0.001 * u * u;
    return {{theta, omega}, -cost};
}

double pendulum_energy(const PendulumState& state, const PendulumParams& p) {
    return 0.5 * state.omega * state.omega + 3.0 * p.gravity / (2.0 * p.length) * std::cos(state.theta);
}

PendulumEnv::PendulumEnv(PendulumParams params, std::size_t theta_bins, std::size_t omega_bins,
                         std::size_t torque_levels)
    : params_(params),
      grid_({{-std::numbers::pi, std::numbers::pi, theta_bins}, {-params.max_speed, params.max_speed, omega_bins}}),
      torques_(linspace(-params.max_torque, params.max_torque, torque_levels)) {
    params_.validate();
    if (torque_levels < 2) throw std::invalid_argument("pendulum needs at least 2 torque levels");
}

std::size_t PendulumEnv::state_index() const {
    const std::array<double, 2> point{state_.theta, state_.omega};
    return grid_.flat_index(point);
}

std::size_t PendulumEnv::reset(Rng& rng) {
    state_.theta = wrap_angle(rng.uniform(-std::numbers::pi, std::numbers::pi));
    state_.omega = rng.uniform(-1.0, 1.0);
    return state_index();
}

StepResult PendulumEnv::step(std::size_t action, Rng& /*rng*/) {
    TLRQ_EXPECTS(action < torques_.size());
    const PendulumStep out = pendulum_step(state_, torques_[action], params_);
    state_ = out.next;
    return {state_index(), out.reward, false};
}

TaskSuite pendulum_suite(const PendulumSuiteConfig& config) {
    if (config.masses.empty() || config.masses.size() != config.lengths.size()) {
        throw std::invalid_argument("pendulum suite needs equal-length, non-empty mass and length vectors");
    }
    std::vector<std::unique_ptr<Environment>> tasks;
    for (std::size_t m = 0; m < config.masses.size(); ++m) {
        PendulumParams p = config.base;
        p.mass = config.masses[m];
        p.length = config.lengths[m];
        tasks.push_back(std::make_unique<PendulumEnv>(p, config.theta_bins, config.omega_bins, config.torque_levels));
    }
    return TaskSuite(std::move(tasks));
}

}  // namespace tlrq::env
