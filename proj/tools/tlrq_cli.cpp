// Command-line front end: train, eval, compare, gradcheck, oracle.

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tlrq/env/chain.hpp"
#include "tlrq/harness/aggregate.hpp"
#include "tlrq/harness/config.hpp"
#include "tlrq/harness/evaluate.hpp"
#include "tlrq/harness/experiment.hpp"
#include "tlrq/harness/export.hpp"
#include "tlrq/learn/drivers.hpp"
#include "tlrq/oracle/finite_diff.hpp"
#include "tlrq/oracle/value_iteration.hpp"
#include "tlrq/tensor/snapshot.hpp"

namespace fs = std::filesystem;
using namespace tlrq;

namespace {

struct Globals {
    std::string config;
    std::string out;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> threads;
};

harness::ExperimentConfig load_config(const Globals& g) {
    harness::ExperimentConfig cfg;
    if (!g.config.empty()) cfg = harness::load_experiment_config(g.config);
    if (!g.out.empty()) cfg.output_dir = g.out;
    if (g.seed) cfg.base_seed = *g.seed;
    if (g.threads) cfg.threads = *g.threads;
    return cfg;
}

void write_text(const fs::path& path, const std::string& text) {
    fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) throw std::runtime_error("cannot write " + path.string());
}

/// Final mean return per (algorithm, task), one line each.
void print_final(const std::vector<harness::SummaryRow>& rows) {
    std::map<std::pair<std::string, std::size_t>, const harness::SummaryRow*> last;
    for (const auto& r : rows) last[{r.algorithm, r.task}] = &r;
    for (const auto& [key, r] : last) {
        std::printf("%-6s task %zu  n=%llu  mean %.4f  band [%.4f, %.4f]\n", key.first.c_str(), key.second,
                    static_cast<unsigned long long>(r->iteration), r->mean, r->lower, r->upper);
    }
}

int run_and_export(harness::ExperimentConfig cfg, bool plots) {
    const fs::path out = cfg.output_dir;
    harness::RunOptions options;
    options.threads = cfg.threads;
    options.checkpoint_dir = out / "checkpoints";
    const harness::ExperimentResult result = harness::run_experiment(cfg, options);
    for (const auto& f : result.failures) {
        std::fprintf(stderr, "seed %llu (%s) failed: %s\n", static_cast<unsigned long long>(f.seed),
                     f.algorithm.c_str(), f.message.c_str());
    }
    write_text(out / "config.json", harness::dump_experiment_config(cfg));
    harness::write_csv(result.records, out / "records.csv");
    if (result.records.empty()) return 1;
    const auto rows = harness::aggregate(result);
    harness::write_summary_csv(rows, out / "summary.csv");
    if (plots) harness::write_plots(rows, out / "plots");
    print_final(rows);
    std::printf("wrote %s\n", (out / "records.csv").string().c_str());
    return result.failures.empty() ? 0 : 1;
}

int cmd_eval(const Globals& g, const std::string& model_path, std::size_t episodes, std::optional<std::size_t> task) {
    const harness::ExperimentConfig cfg = load_config(g);
    const env::TaskSuite suite = cfg.build_suite();
    const FactorSet model = load_snapshot(model_path);
    if (model.dims().n_states != suite.n_states() || model.dims().n_actions != suite.n_actions()) {
        throw std::invalid_argument(model_path + ": model shape does not match the configured suite");
    }
    learn::PolicyView view = model.dims().n_tasks == suite.size() ? learn::PolicyView::joint(model)
                             : model.dims().n_tasks == 1
                                 ? learn::PolicyView::shared(model, suite.size())
                                 : throw std::invalid_argument(model_path + ": task mode matches neither 1 nor M");
    const std::optional<double> discount =
        cfg.hyper.discounted_eval ? std::optional<double>(cfg.hyper.gamma) : std::nullopt;
    for (std::size_t m = 0; m < suite.size(); ++m) {
        if (task && *task != m) continue;
        auto env = suite[m].clone();
        Rng rng = Rng::keyed({cfg.base_seed, 3, m});
        const double value =
            harness::evaluate_policy(view, m, *env, cfg.hyper.episode_length, episodes, rng, discount);
        std::printf("task %zu  mean return %.6f over %zu episodes\n", m, value, episodes);
    }
    return 0;
}

int cmd_gradcheck(const Globals& g, std::size_t instances, double tol) {
    const auto report = oracle::random_gradcheck(instances, g.seed.value_or(0));
    std::printf("instances %zu  components %zu  max relative error %.3e\n", report.instances, report.components,
                report.max_relative_error);
    return report.max_relative_error <= tol ? 0 : 1;
}

int cmd_oracle(const Globals& g, const std::string& model_path) {
    std::vector<env::ChainMdpSpec> specs;
    double gamma = 0.9;
    if (!g.config.empty()) {
        const harness::ExperimentConfig cfg = load_config(g);
        if (cfg.family != harness::Family::chain) throw std::invalid_argument("oracle needs a chain config");
        specs = cfg.chain;
        gamma = cfg.hyper.gamma;
    } else {
        specs.push_back(env::five_state_chain(gamma));
    }
    std::optional<FactorSet> model;
    if (!model_path.empty()) model = load_snapshot(model_path);
    for (std::size_t m = 0; m < specs.size(); ++m) {
        env::ChainMdpSpec spec = specs[m];
        spec.gamma = gamma;
        const auto vi = oracle::value_iteration(spec);
        std::printf("task %zu  (%zu sweeps)\n", m, vi.sweeps);
        for (Eigen::Index s = 0; s < vi.q.rows(); ++s) {
            Eigen::Index best = 0;
            vi.q.row(s).maxCoeff(&best);
            std::printf("  s%-3lld", static_cast<long long>(s));
            for (Eigen::Index a = 0; a < vi.q.cols(); ++a) std::printf(" %10.6f", vi.q(s, a));
            std::printf("   a*=%lld\n", static_cast<long long>(best));
        }
        if (model) {
            const std::size_t row = model->dims().n_tasks == 1 ? 0 : m;
            std::printf("  policy match %.4f\n", oracle::policy_match(*model, row, vi.q));
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Low-rank tensor multi-task Q-learning experiments"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--config", g.config, "experiment config (JSON)")->check(CLI::ExistingFile);
    app.add_option("--out", g.out, "output directory (overrides the config)");
    app.add_option("--seed", g.seed, "base seed (overrides the config)");
    app.add_option("--threads", g.threads, "worker threads for replications")->check(CLI::PositiveNumber);

    auto* train = app.add_subcommand("train", "run the configured algorithms and write records.csv");
    bool train_plots = false;
    train->add_flag("--plots", train_plots, "also write per-task SVG plots");

    auto* eval = app.add_subcommand("eval", "evaluate a saved model greedily on the configured suite");
    std::string model_path;
    std::size_t episodes = 100;
    std::optional<std::size_t> task;
    eval->add_option("--model", model_path, "factor-set checkpoint")->required()->check(CLI::ExistingFile);
    eval->add_option("--episodes", episodes, "test episodes per task")->check(CLI::PositiveNumber);
    eval->add_option("--task", task, "only this task");

    auto* compare = app.add_subcommand("compare", "run S-TLR-Q, LR-Q and C-LR-Q side by side with plots");

    auto* gradcheck = app.add_subcommand("gradcheck", "check semi-gradients against finite differences");
    std::size_t instances = 100;
    double tol = 1e-6;
    gradcheck->add_option("--instances", instances, "random instances")->check(CLI::PositiveNumber);
    gradcheck->add_option("--tol", tol, "maximum relative error");

    auto* oracle_cmd = app.add_subcommand("oracle", "value iteration on chain tasks");
    std::string oracle_model;
    oracle_cmd->add_option("--model", oracle_model, "report policy agreement of this checkpoint")
        ->check(CLI::ExistingFile);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*train) return run_and_export(load_config(g), train_plots);
        if (*compare) {
            harness::ExperimentConfig cfg = load_config(g);
            cfg.algorithms = {learn::Algorithm::stlrq, learn::Algorithm::lrq, learn::Algorithm::clrq};
            return run_and_export(cfg, true);
        }
        if (*eval) return cmd_eval(g, model_path, episodes, task);
        if (*gradcheck) return cmd_gradcheck(g, instances, tol);
        if (*oracle_cmd) return cmd_oracle(g, oracle_model);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
