#include <gtest/gtest.h>

#include <cmath>

#include "tlrq/env/wireless.hpp"

using namespace tlrq;
using namespace tlrq::env;

TEST(WirelessStep, OccupiedChannelLosesEverythingButDrainsBattery) {
    const WirelessParams p;
    Rng rng(1);
    for (double power : p.power_levels) {
        const WirelessStep out = wireless_step({2, true, 5.0, 4.0}, power, p, rng);
        EXPECT_EQ(out.departures, 0.0);
        EXPECT_EQ(out.power_used, power);
    }
}

TEST(WirelessStep, SensingKeepsEnergyOnBusyChannel) {
    WirelessParams p;
    p.sense_before_transmit = true;
    Rng rng(1);
    EXPECT_EQ(wireless_step({2, true, 5.0, 4.0}, 2.0, p, rng).power_used, 0.0);
}

TEST(WirelessStep, NoOpDynamics) {
    WirelessParams p;
    p.arrival_prob = 0.0;
    p.harvest_prob = 0.0;
    Rng rng(4);
    const WirelessStep out = wireless_step({1, false, 3.25, 6.5}, 0.0, p, rng);
    EXPECT_EQ(out.next.battery, 3.25);
    EXPECT_EQ(out.next.queue, 6.5);
    EXPECT_NEAR(out.reward, 0.1 * 3.25 - 6.5, 1e-12);
}

TEST(WirelessStep, ShannonDepartures) {
    WirelessParams p;
    p.fading_levels = {1.0};
    p.power_levels = {0.0, 3.0};
    p.battery_capacity = 10.0;
    Rng rng(2);
    const WirelessStep out = wireless_step({0, false, 5.0, 8.0}, 3.0, p, rng);
    EXPECT_NEAR(out.departures, 2.0, 1e-12);
}

TEST(WirelessStep, PowerCappedAtBattery) {
    const WirelessParams p;
    Rng rng(3);
    const WirelessStep out = wireless_step({2, false, 0.5, 8.0}, 2.0, p, rng);
    EXPECT_EQ(out.power_used, 0.5);
    EXPECT_NEAR(out.departures, std::log2(1.0 + 2.0 * 0.5), 1e-12);
}

TEST(WirelessStep, StaysWithinCapacities) {
    WirelessParams p;
    p.arrival_size = 3.0;
    p.arrival_prob = 0.9;
    p.harvest_amount = 2.0;
    p.harvest_prob = 0.9;
    Rng rng(8), policy(9);
    WirelessState s{0, false, 2.0, 2.0};
    for (int t = 0; t < 2000; ++t) {
        s = wireless_step(s, p.power_levels[policy.below(p.power_levels.size())], p, rng).next;
        ASSERT_GE(s.battery, 0.0);
        ASSERT_LE(s.battery, p.battery_capacity);
        ASSERT_GE(s.queue, 0.0);
        ASSERT_LE(s.queue, p.queue_capacity);
        ASSERT_LT(s.fading, p.fading_levels.size());
    }
}

TEST(WirelessStep, OccupancyFrequencyMatchesProbability) {
    const WirelessParams p;
    Rng rng(11);
    int busy = 0;
    const int n = 100000;
    WirelessState s{};
    for (int i = 0; i < n; ++i) {
        s = wireless_step(s, 0.0, p, rng).next;
        busy += s.occupied ? 1 : 0;
    }
    const double sigma = std::sqrt(0.25 / n);
    EXPECT_NEAR(static_cast<double>(busy) / n, 0.5, 3 * sigma);
}

TEST(WirelessParams, Validation) {
    WirelessParams p;
    p.power_levels = {0.5, 1.0};
    EXPECT_THROW(p.validate(), std::invalid_argument);
    p = {};
    p.arrival_prob = 1.5;
    EXPECT_THROW(p.validate(), std::invalid_argument);
    p = {};
    p.queue_capacity = 0.0;
    EXPECT_THROW(p.validate(), std::invalid_argument);
}

TEST(WirelessEnv, StateIndexLayout) {
    WirelessEnv env(WirelessParams{}, 6, 11);
    EXPECT_EQ(env.n_states(), 3u * 2u * 66u);
    EXPECT_EQ(env.n_actions(), 4u);
    env.set_state({2, true, 5.0, 10.0});
    EXPECT_EQ(env.state_index(), env.n_states() - 1);
    env.set_state({0, false, 0.0, 0.0});
    EXPECT_EQ(env.state_index(), 0u);
    env.set_state({1, false, 0.0, 0.0});
    EXPECT_EQ(env.state_index(), 2u * 66u);
}

TEST(WirelessSuite, DefaultTaskVectors) {
    const TaskSuite suite = wireless_suite({});
    ASSERT_EQ(suite.size(), 4u);
    const auto& first = dynamic_cast<const WirelessEnv&>(suite[0]).params();
    const auto& last = dynamic_cast<const WirelessEnv&>(suite[3]).params();
    EXPECT_EQ(first.arrival_size, 1.0);
    EXPECT_EQ(first.harvest_amount, 0.5);
    EXPECT_EQ(first.arrival_prob, 0.2);
    EXPECT_EQ(first.harvest_prob, 0.2);
    EXPECT_EQ(last.arrival_size, 2.0);
    EXPECT_EQ(last.harvest_amount, 3.0);
    EXPECT_EQ(last.arrival_prob, 0.8);
    EXPECT_EQ(last.harvest_prob, 0.8);
}

TEST(WirelessSuite, CustomSizeAndMismatch) {
    WirelessSuiteConfig two;
    two.arrival_sizes = {1.0, 2.0};
    two.harvest_amounts = {0.5, 1.0};
    two.arrival_probs = {0.1, 0.2};
    two.harvest_probs = {0.3, 0.4};
    EXPECT_EQ(wireless_suite(two).size(), 2u);
    two.harvest_probs = {0.3};
    EXPECT_THROW(wireless_suite(two), std::invalid_argument);
}

TEST(WirelessEnv, ReproducibleEpisodes) {
    WirelessEnv a(WirelessParams{}, 6, 11);
    WirelessEnv b(WirelessParams{}, 6, 11);
    Rng ra(21), rb(21);
    EXPECT_EQ(a.reset(ra), b.reset(rb));
    for (std::size_t t = 0; t < 300; ++t) {
        const auto x = a.step(t % 4, ra);
        const auto y = b.step(t % 4, rb);
        ASSERT_LT(x.next_state, a.n_states());
        EXPECT_EQ(x.next_state, y.next_state);
        EXPECT_EQ(x.reward, y.reward);
    }
}
