#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "tlrq/env/chain.hpp"
#include "tlrq/env/environment.hpp"
#include "tlrq/env/pendulum.hpp"
#include "tlrq/env/wireless.hpp"
#include "tlrq/learn/hyperparams.hpp"

namespace tlrq::harness {

enum class Family { pendulum, wireless, chain };

std::string_view to_string(Family family);

/// Everything needed to reproduce an experiment. See README.md for the
/// JSON layout; unspecified fields keep the defaults of the member types.
struct ExperimentConfig {
    Family family = Family::chain;
    env::PendulumSuiteConfig pendulum;
    env::WirelessSuiteConfig wireless;
    /// One spec per task; gamma is taken from the hyperparameters.
    std::vector<env::ChainMdpSpec> chain;

    learn::Hyperparams hyper;
    std::vector<learn::Algorithm> algorithms{learn::Algorithm::stlrq};
    std::size_t replications = 20;
    std::uint64_t base_seed = 0;
    std::filesystem::path output_dir = "out";
    std::size_t threads = 1;

    [[nodiscard]] std::size_t n_tasks() const;
    /// Builds the task suite; throws std::invalid_argument on bad parameters.
    [[nodiscard]] env::TaskSuite build_suite() const;
    /// Full consistency check, including building the suite once.
    void validate() const;
};

/// Throws std::invalid_argument with the offending key on malformed input.
ExperimentConfig parse_experiment_config(std::string_view json_text);
ExperimentConfig load_experiment_config(const std::filesystem::path& path);

/// Canonical JSON of a config, with every field spelled out.
std::string dump_experiment_config(const ExperimentConfig& config);

}  // namespace tlrq::harness
