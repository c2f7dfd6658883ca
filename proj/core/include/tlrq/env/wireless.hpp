#pragma once

#include <memory>
#include <vector>

#include "tlrq/env/environment.hpp"
#include "tlrq/env/grid.hpp"

namespace tlrq::env {

/// Energy-harvesting transmitter with a packet queue on a shared channel.
struct WirelessParams {
    double arrival_size = 1.0;       // packets arriving per arrival event
    double arrival_prob = 0.2;
    double harvest_amount = 0.5;     // energy units per harvest event
    double harvest_prob = 0.2;
    std::vector<double> fading_levels{0.5, 1.0, 2.0};  // drawn uniformly each step
    double occupancy_prob = 0.5;
    double battery_capacity = 5.0;
    double queue_capacity = 10.0;
    std::vector<double> power_levels{0.0, 0.5, 1.0, 2.0};
    double noise = 1.0;
    double battery_weight = 0.1;
    double queue_weight = 1.0;
    bool sense_before_transmit = false;  // when set, no energy is spent on an occupied channel

    void validate() const;
};

struct WirelessState {
    std::size_t fading = 0;  // index into fading_levels
    bool occupied = false;
    double battery = 0.0;
    double queue = 0.0;
};

struct WirelessStep {
    WirelessState next;
    double reward = 0.0;
    double departures = 0.0;
    double power_used = 0.0;
};

/// One slot: transmit at min(power, battery), serve log2(1 + h p / noise)
/// packets if the channel is free, then add arrivals and harvested energy,
/// clamp to capacities and redraw fading and occupancy. Random draws happen
/// in a fixed order (arrival, harvest, fading, occupancy) every call.
WirelessStep wireless_step(const WirelessState& state, double power, const WirelessParams& params,
                           Rng& rng);

/// Wireless task over the (fading, occupancy, battery bin, queue bin) grid,
/// composed row-major in that order. Actions index power_levels.
/// Episodes start with fading and occupancy drawn from their distributions
/// and battery and queue uniform over their ranges.
class WirelessEnv final : public Environment {
public:
    WirelessEnv(WirelessParams params, std::size_t battery_bins, std::size_t queue_bins);

    std::size_t reset(Rng& rng) override;
    StepResult step(std::size_t action, Rng& rng) override;

    [[nodiscard]] std::size_t n_states() const override;
    [[nodiscard]] std::size_t n_actions() const override { return params_.power_levels.size(); }
    [[nodiscard]] std::unique_ptr<Environment> clone() const override {
        return std::make_unique<WirelessEnv>(*this);
    }

    [[nodiscard]] const WirelessParams& params() const { return params_; }
    [[nodiscard]] const WirelessState& state() const { return state_; }
    void set_state(const WirelessState& s) { state_ = s; }
    [[nodiscard]] std::size_t state_index() const;

private:
    WirelessParams params_;
    DiscretizationGrid levels_;  // battery x queue
    WirelessState state_;
};

struct WirelessSuiteConfig {
    std::vector<double> arrival_sizes{1.0, 1.0, 1.0, 2.0};
    std::vector<double> harvest_amounts{0.5, 0.5, 0.5, 3.0};
    std::vector<double> arrival_probs{0.2, 0.2, 0.5, 0.8};
    std::vector<double> harvest_probs{0.2, 0.5, 0.5, 0.8};
    WirelessParams base;  // the four per-task fields are overridden
    std::size_t battery_bins = 6;
    std::size_t queue_bins = 11;
};

TaskSuite wireless_suite(const WirelessSuiteConfig& config);

}  // namespace tlrq::env
