#include "tlrq/env/wireless.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "tlrq/contract.hpp"

namespace tlrq::env {

namespace {

bool is_probability(double p) { return p >= 0.0 && p <= 1.0; }

}  // namespace

void WirelessParams::validate() const {
    if (!is_probability(arrival_prob) || !is_probability(harvest_prob) || !is_probability(occupancy_prob)) {
        throw std::invalid_argument("wireless probabilities must lie in [0, 1]");
    }
    if (!(battery_capacity > 0 && queue_capacity > 0)) {
        throw std::invalid_argument("wireless capacities must be positive");
    }
    if (!(arrival_size >= 0 && harvest_amount >= 0 && noise > 0)) {
        throw std::invalid_argument("wireless arrival size and harvest must be non-negative, noise positive");
    }
    if (!(battery_weight > 0 && queue_weight > 0)) {
        throw std::invalid_argument("wireless reward weights must be positive");
    }
    if (fading_levels.empty() || std::any_of(fading_levels.begin(), fading_levels.end(), [](double h) { return !(h >= 0); })) {
        throw std::invalid_argument("wireless fading levels must be non-empty and non-negative");
    }
    if (power_levels.empty() || std::any_of(power_levels.begin(), power_levels.end(), [](double p) { return !(p >= 0); })) {
        throw std::invalid_argument("wireless power levels must be non-empty and non-negative");
    }
    if (std::find(power_levels.begin(), power_levels.end(), 0.0) == power_levels.end()) {
        throw std::invalid_argument("wireless power levels must include 0 (no transmission)");
    }
}

WirelessStep wireless_step(const WirelessState& s, double power, const WirelessParams& p, Rng& rng) {
    TLRQ_EXPECTS(s.fading < p.fading_levels.size());
    double used = std::clamp(power, 0.0, std::max(s.battery, 0.0));
    if (p.sense_before_transmit && s.occupied) used = 0.0;
    const double departures = s.occupied ? 0.0 : std::log2(1.0 + p.fading_levels[s.fading] * used / p.noise);

    const double arrivals = rng.bernoulli(p.arrival_prob) ? p.arrival_size : 0.0;
    const double harvested = rng.bernoulli(p.harvest_prob) ? p.harvest_amount : 0.0;

    WirelessStep out;
    out.departures = departures;
    out.power_used = used;
    out.next.fading = static_cast<std::size_t>(rng.below(p.fading_levels.size()));
    out.next.occupied = rng.bernoulli(p.occupancy_prob);
    out.next.queue = std::clamp(s.queue - departures + arrivals, 0.0, p.queue_capacity);
    out.next.battery = std::clamp(s.battery - used + harvested, 0.0, p.battery_capacity);
    out.reward = p.battery_weight * out.next.battery - p.queue_weight * out.next.queue;
    return out;
}

WirelessEnv::WirelessEnv(WirelessParams params, std::size_t battery_bins, std::size_t queue_bins)
    : params_(std::move(params)),
      levels_({{0.0, params_.battery_capacity, battery_bins}, {0.0, params_.queue_capacity, queue_bins}}) {
    params_.validate();
}

std::size_t WirelessEnv::n_states() const {
    return params_.fading_levels.size() * 2 * levels_.size();
}

std::size_t WirelessEnv::state_index() const {
    const std::array<double, 2> point{state_.battery, state_.queue};
    const std::size_t level = levels_.flat_index(point);
    return (state_.fading * 2 + (state_.occupied ? 1 : 0)) * levels_.size() + level;
}

std::size_t WirelessEnv::reset(Rng& rng) {
    state_.fading = static_cast<std::size_t>(rng.below(params_.fading_levels.size()));
    state_.occupied = rng.bernoulli(params_.occupancy_prob);
    state_.battery = rng.uniform(0.0, params_.battery_capacity);
    state_.queue = rng.uniform(0.0, params_.queue_capacity);
    return state_index();
}

StepResult WirelessEnv::step(std::size_t action, Rng& rng) {
    TLRQ_EXPECTS(action < params_.power_levels.size());
    const WirelessStep out = wireless_step(state_, params_.power_levels[action], params_, rng);
    state_ = out.next;
    return {state_index(), out.reward, false};
}

TaskSuite wireless_suite(const WirelessSuiteConfig& config) {
    const std::size_t m = config.arrival_sizes.size();
    if (m == 0 || config.harvest_amounts.size() != m || config.arrival_probs.size() != m ||
        config.harvest_probs.size() != m) {
        throw std::invalid_argument("wireless suite needs four equal-length, non-empty task vectors");
    }
    std::vector<std::unique_ptr<Environment>> tasks;
    for (std::size_t i = 0; i < m; ++i) {
        WirelessParams p = config.base;
        p.arrival_size = config.arrival_sizes[i];
        p.harvest_amount = config.harvest_amounts[i];
        p.arrival_prob = config.arrival_probs[i];
        p.harvest_prob = config.harvest_probs[i];
        tasks.push_back(std::make_unique<WirelessEnv>(p, config.battery_bins, config.queue_bins));
    }
    return TaskSuite(std::move(tasks));
}

}  // namespace tlrq::env
