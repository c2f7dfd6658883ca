#include "tlrq/harness/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>
#include <tuple>

#include "tlrq/harness/evaluate.hpp"
#include "tlrq/learn/drivers.hpp"
#include "tlrq/tensor/snapshot.hpp"

namespace tlrq::harness {

namespace {

struct Job {
    learn::Algorithm algorithm;
    std::uint64_t seed;
};

struct JobOutput {
    std::vector<Record> records;
    std::optional<RunStats> stats;
    std::optional<SeedFailure> failure;
};

JobOutput run_job(const ExperimentConfig& config, const Job& job, const RunOptions& options) {
    JobOutput out;
    const std::string name(learn::to_string(job.algorithm));
    try {
        const env::TaskSuite suite = config.build_suite();
        learn::Hyperparams hyper = config.hyper;
        hyper.seed = job.seed;
        const std::optional<double> discount =
            hyper.discounted_eval ? std::optional<double>(hyper.gamma) : std::nullopt;

        auto sink = [&](std::uint64_t n, const learn::PolicyView& policy) {
            for (std::size_t m = 0; m < suite.size(); ++m) {
                auto env = suite[m].clone();
                Rng eval_rng = Rng::keyed({job.seed, 2, n, m});
                const double value =
                    evaluate_policy(policy, m, *env, hyper.episode_length, hyper.eval_episodes, eval_rng, discount);
                out.records.push_back({name, job.seed, m, n, value});
            }
        };

        Rng rng = Rng::keyed({job.seed, 1});
        const learn::RunOutput run = learn::run_algorithm(job.algorithm, suite, hyper, rng, sink);
        if (options.checkpoint_dir) {
            for (std::size_t i = 0; i < run.models.size(); ++i) {
                save_snapshot(run.models[i], checkpoint_path(*options.checkpoint_dir, name, job.seed, i));
            }
        }
        out.stats = RunStats{name, job.seed, run.transitions, run.updates};
    } catch (const std::exception& e) {
        out.records.clear();
        out.failure = SeedFailure{name, job.seed, e.what()};
    }
    return out;
}

}  // namespace

std::filesystem::path checkpoint_path(const std::filesystem::path& dir, std::string_view algorithm,
                                      std::uint64_t seed, std::size_t index) {
    return dir / (std::string(algorithm) + "_seed" + std::to_string(seed) + "_model" + std::to_string(index) +
                  ".json");
}

ExperimentResult run_experiment(const ExperimentConfig& config, const RunOptions& options) {
    config.validate();
    if (options.checkpoint_dir) std::filesystem::create_directories(*options.checkpoint_dir);

    std::vector<Job> jobs;
    for (auto algo : config.algorithms) {
        for (std::size_t r = 0; r < config.replications; ++r) jobs.push_back({algo, config.base_seed + r});
    }

    std::vector<JobOutput> outputs(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < jobs.size(); i = next.fetch_add(1)) {
            outputs[i] = run_job(config, jobs[i], options);
        }
    };
    const std::size_t n_threads = std::clamp<std::size_t>(options.threads, 1, std::max<std::size_t>(jobs.size(), 1));
    if (n_threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    }

    ExperimentResult result;
    for (auto& o : outputs) {
        result.records.insert(result.records.end(), o.records.begin(), o.records.end());
        if (o.stats) result.runs.push_back(*o.stats);
        if (o.failure) result.failures.push_back(*o.failure);
    }
    std::sort(result.records.begin(), result.records.end(), [](const Record& a, const Record& b) {
        return std::tie(a.algorithm, a.seed, a.task, a.iteration) < std::tie(b.algorithm, b.seed, b.task, b.iteration);
    });
    return result;
}

}  // namespace tlrq::harness
