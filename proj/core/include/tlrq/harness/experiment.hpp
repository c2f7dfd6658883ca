#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "tlrq/harness/config.hpp"
#include "tlrq/tensor/factor_set.hpp"

namespace tlrq::harness {

/// One evaluation: mean greedy return of `task` after `iteration`
/// transitions of replication `seed`.
struct Record {
    std::string algorithm;
    std::uint64_t seed = 0;
    std::size_t task = 0;
    std::uint64_t iteration = 0;
    double value = 0.0;

    friend bool operator==(const Record&, const Record&) = default;
};

struct RunStats {
    std::string algorithm;
    std::uint64_t seed = 0;
    std::uint64_t transitions = 0;
    std::uint64_t updates = 0;
};

struct SeedFailure {
    std::string algorithm;
    std::uint64_t seed = 0;
    std::string message;
};

struct ExperimentResult {
    /// Sorted by (algorithm, seed, task, iteration).
    std::vector<Record> records;
    std::vector<RunStats> runs;
    std::vector<SeedFailure> failures;
};

struct RunOptions {
    /// Worker threads; replications are independent, so the result does
    /// not depend on this.
    std::size_t threads = 1;
    /// When set, the final models of every run are written here.
    std::optional<std::filesystem::path> checkpoint_dir{};
};

/// Runs every configured algorithm on replications base_seed ..
/// base_seed + R - 1. Replication r uses seed base_seed + r for model
/// initialization, a behaviour stream keyed by that seed, and evaluation
/// streams keyed by (seed, iteration, task) that are shared across
/// algorithms. The config is validated before any work starts; a failing
/// replication is recorded in `failures` and the others still run.
ExperimentResult run_experiment(const ExperimentConfig& config, const RunOptions& options = {});

/// Path of the checkpoint for model `index` of one run.
std::filesystem::path checkpoint_path(const std::filesystem::path& dir, std::string_view algorithm,
                                      std::uint64_t seed, std::size_t index);

}  // namespace tlrq::harness
