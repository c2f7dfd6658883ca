#include <gtest/gtest.h>

#include <filesystem>
#include <string>

#include "tlrq/harness/config.hpp"

using namespace tlrq;
using namespace tlrq::harness;

namespace {

const std::filesystem::path kConfigDir = TLRQ_CONFIG_DIR;

void expect_rejected(const std::string& text, const std::string& fragment) {
    try {
        parse_experiment_config(text);
        FAIL() << "accepted: " << text;
    } catch (const std::invalid_argument& e) {
        EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos) << e.what();
    }
}

}  // namespace

TEST(Config, ParsesMinimalChain) {
    const auto c = parse_experiment_config(R"({"family":"chain","chain":{"preset":"five_state","copies":2},
        "hyperparams":{"rank":2,"learning_rate":{"eta0":0.1,"schedule":"inverse_step","decay":0.5},"grad_clip":null}})");
    EXPECT_EQ(c.family, Family::chain);
    EXPECT_EQ(c.n_tasks(), 2u);
    EXPECT_EQ(c.hyper.rank, 2u);
    EXPECT_EQ(c.hyper.lr.kind, learn::ScheduleKind::inverse_step);
    EXPECT_DOUBLE_EQ(c.hyper.lr.decay, 0.5);
    EXPECT_FALSE(c.hyper.grad_clip.has_value());
    ASSERT_EQ(c.algorithms.size(), 1u);
    EXPECT_EQ(c.algorithms[0], learn::Algorithm::stlrq);
    EXPECT_NO_THROW(c.validate());
    EXPECT_EQ(c.build_suite().dims().n_states, 5u);
}

TEST(Config, DefaultsSurviveUnspecifiedFields) {
    const auto c = parse_experiment_config(R"({"family":"wireless","hyperparams":{"rank":3}})");
    const ExperimentConfig defaults;
    EXPECT_EQ(c.replications, defaults.replications);
    EXPECT_EQ(c.wireless.battery_bins, defaults.wireless.battery_bins);
    EXPECT_EQ(c.hyper.grad_clip, defaults.hyper.grad_clip);
    EXPECT_EQ(c.n_tasks(), defaults.wireless.arrival_sizes.size());
}

TEST(Config, RejectsMalformedInput) {
    expect_rejected("{", "not valid JSON");
    expect_rejected(R"({"family":"chain","chain":{"preset":"five_state"},"bogus":1})", "bogus");
    expect_rejected(R"({"family":"pendulum","pendulum":{"masses":[1]}})", "masses");
    expect_rejected(R"({"family":"chain","chain":{"preset":"five_state"},"hyperparams":{"rank":"two"}})",
                    "hyperparams.rank");
    expect_rejected(R"({"family":"cartpole"})", "family");
    expect_rejected(R"({"family":"chain"})", "chain");
    expect_rejected(R"({"family":"chain","chain":{"preset":"ten_state"}})", "ten_state");
    expect_rejected(R"({"family":"chain","chain":{"preset":"five_state"},"algorithm":"stlrq","algorithms":["lrq"]})",
                    "either");
    expect_rejected(R"({"family":"chain","chain":{"preset":"five_state"},
        "hyperparams":{"learning_rate":{"schedule":"cosine"}}})", "schedule");
    EXPECT_THROW(parse_experiment_config(R"({"family":"chain","chain":{"preset":"five_state"},"algorithm":"dqn"})"),
                 std::invalid_argument);
}

TEST(Config, ValidateCatchesInconsistentSettings) {
    auto c = parse_experiment_config(R"({"family":"chain","chain":{"preset":"five_state"},"hyperparams":{"rank":2}})");
    c.replications = 0;
    EXPECT_THROW(c.validate(), std::invalid_argument);
    c.replications = 1;
    c.hyper.rank = 0;
    EXPECT_THROW(c.validate(), std::invalid_argument);
    c.hyper.rank = 2;
    c.hyper.lambdas = {1.0, 1.0};  // one task only
    EXPECT_THROW(c.validate(), std::invalid_argument);
}

TEST(Config, DumpRoundTripsForEveryFamily) {
    for (const char* name : {"chain-oracle.json", "pendulum-desk.json", "wireless-desk.json"}) {
        const auto c = load_experiment_config(kConfigDir / name);
        const std::string dumped = dump_experiment_config(c);
        const auto again = parse_experiment_config(dumped);
        EXPECT_EQ(dump_experiment_config(again), dumped) << name;
        EXPECT_EQ(again.n_tasks(), c.n_tasks());
        EXPECT_EQ(again.hyper.total_iterations(again.n_tasks()), c.hyper.total_iterations(c.n_tasks()));
    }
}

TEST(Config, ShippedConfigsValidate) {
    std::size_t count = 0;
    for (const auto& entry : std::filesystem::directory_iterator(kConfigDir)) {
        if (entry.path().extension() != ".json") continue;
        ++count;
        EXPECT_NO_THROW(load_experiment_config(entry.path()).validate()) << entry.path();
    }
    EXPECT_GE(count, 5u);
}

TEST(Config, MissingFileNamesPath) {
    try {
        load_experiment_config("/nonexistent/dir/cfg.json");
        FAIL();
    } catch (const std::runtime_error& e) {
        EXPECT_NE(std::string(e.what()).find("/nonexistent/dir/cfg.json"), std::string::npos);
    }
}

TEST(Config, FamilyNames) {
    EXPECT_EQ(to_string(Family::pendulum), "pendulum");
    EXPECT_EQ(to_string(Family::wireless), "wireless");
    EXPECT_EQ(to_string(Family::chain), "chain");
}
