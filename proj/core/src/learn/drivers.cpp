#include "tlrq/learn/drivers.hpp"

#include <stdexcept>

#include "tlrq/contract.hpp"

namespace tlrq::learn {

PolicyView PolicyView::joint(const FactorSet& fs) {
    return PolicyView(Layout::joint, std::span<const FactorSet>(&fs, 1), fs.dims().n_tasks);
}

PolicyView PolicyView::per_task(std::span<const FactorSet> models) {
    return PolicyView(Layout::per_task, models, models.size());
}

PolicyView PolicyView::shared(const FactorSet& fs, std::size_t n_tasks) {
    return PolicyView(Layout::shared, std::span<const FactorSet>(&fs, 1), n_tasks);
}

const FactorSet& PolicyView::model(std::size_t task) const {
    TLRQ_EXPECTS(task < n_tasks_);
    return layout_ == Layout::per_task ? models_[task] : models_[0];
}

std::size_t PolicyView::row(std::size_t task) const {
    TLRQ_EXPECTS(task < n_tasks_);
    return layout_ == Layout::joint ? task : 0;
}

std::size_t PolicyView::greedy(std::size_t task, std::size_t state) const {
    return greedy_action(model(task), state, row(task)).action;
}

namespace {

// One semi-gradient step of `fs` on `t`, whose task field already names
// the row of `fs` to train.
void update(FactorSet& fs, const Transition& t, double lambda, double eta, const Hyperparams& h, Rng& rng) {
    double target = 0.0;
    if (h.exploratory_target && rng.uniform01() < h.epsilon) {
        const auto a = static_cast<std::size_t>(rng.below(fs.dims().n_actions));
        target = t.reward + h.gamma * evaluate(fs, t.next_state, a, t.task);
    } else {
        target = td_target(fs, t, h.gamma);
    }
    SparseGrad g = semi_gradients_from_residual(fs, t, target - evaluate(fs, t.state, t.action, t.task), lambda);
    if (h.grad_clip) clip_rows(g, *h.grad_clip);
    apply_update(fs, g, eta);
}

struct JointModel {
    std::vector<FactorSet> models;

    JointModel(const Dims& d, const Hyperparams& h) { models.push_back(new_factor_set(d, h.rank, h.seed, h.init)); }
    [[nodiscard]] PolicyView policy() const { return PolicyView::joint(models[0]); }
    std::size_t act(std::size_t m, std::size_t s, const Hyperparams& h, Rng& rng) const {
        return select_action(models[0], s, m, h.epsilon, rng);
    }
    std::uint64_t learn(const Transition& t, double eta, const Hyperparams& h, Rng& rng) {
        update(models[0], t, h.lambda(t.task), eta, h, rng);
        return 1;
    }
};

struct PerTaskModels {
    std::vector<FactorSet> models;

    PerTaskModels(const Dims& d, const Hyperparams& h) {
        for (std::size_t m = 0; m < d.n_tasks; ++m) {
            models.push_back(new_factor_set({d.n_states, d.n_actions, 1}, h.rank, h.seed + m, h.init));
        }
    }
    [[nodiscard]] PolicyView policy() const { return PolicyView::per_task(models); }
    std::size_t act(std::size_t m, std::size_t s, const Hyperparams& h, Rng& rng) const {
        return select_action(models[m], s, 0, h.epsilon, rng);
    }
    std::uint64_t learn(const Transition& t, double eta, const Hyperparams& h, Rng& rng) {
        Transition local = t;
        local.task = 0;
        const std::size_t repeats = models.size();
        for (std::size_t i = 0; i < repeats; ++i) update(models[t.task], local, h.lambda(t.task), eta, h, rng);
        return repeats;
    }
};

struct SharedModel {
    std::vector<FactorSet> models;
    std::size_t n_tasks;

    SharedModel(const Dims& d, const Hyperparams& h) : n_tasks(d.n_tasks) {
        models.push_back(new_factor_set({d.n_states, d.n_actions, 1}, h.rank, h.seed, h.init));
    }
    [[nodiscard]] PolicyView policy() const { return PolicyView::shared(models[0], n_tasks); }
    std::size_t act(std::size_t /*m*/, std::size_t s, const Hyperparams& h, Rng& rng) const {
        return select_action(models[0], s, 0, h.epsilon, rng);
    }
    std::uint64_t learn(const Transition& t, double eta, const Hyperparams& h, Rng& rng) {
        Transition local = t;
        local.task = 0;
        update(models[0], local, h.lambda(t.task), eta, h, rng);
        return 1;
    }
};

template <class Model>
RunOutput train(const env::TaskSuite& suite, const Hyperparams& hyper, Rng& rng, const CheckpointSink& sink) {
    const Dims dims = suite.dims();
    hyper.validate(dims.n_tasks);
    Model model(dims, hyper);

    const std::uint64_t budget = hyper.total_iterations(dims.n_tasks);
    const std::uint64_t interval = hyper.resolved_eval_interval();
    auto checkpoint = [&](std::uint64_t n) {
        if (sink) sink(n, model.policy());
    };

    env::TaskSuite envs = suite;
    std::vector<Rng> env_rngs;
    env_rngs.reserve(dims.n_tasks);
    for (std::size_t m = 0; m < dims.n_tasks; ++m) env_rngs.push_back(Rng::keyed({rng.next(), m}));

    RunOutput out;
    checkpoint(0);

    // Takes one transition of task m from `state`; returns false once the
    // budget is spent.
    auto transition = [&](std::size_t m, std::size_t& state, bool& done) {
        const std::size_t action = model.act(m, state, hyper, rng);
        const env::StepResult step = envs[m].step(action, env_rngs[m]);
        const Transition t{m, state, action, step.reward, step.next_state};
        out.updates += model.learn(t, learning_rate(hyper.lr, out.transitions), hyper, rng);
        ++out.transitions;
        state = step.next_state;
        done = step.done;
        if (out.transitions % interval == 0 || out.transitions == budget) checkpoint(out.transitions);
        return out.transitions < budget;
    };

    if (budget > 0 && !hyper.interleaved) {
        bool running = true;
        while (running) {
            for (std::size_t m = 0; m < dims.n_tasks && running; ++m) {
                std::size_t state = envs[m].reset(env_rngs[m]);
                bool done = false;
                for (std::size_t t = 0; t < hyper.episode_length && running && !done; ++t) {
                    running = transition(m, state, done);
                }
            }
        }
    } else if (budget > 0) {
        std::vector<std::size_t> states(dims.n_tasks);
        std::vector<std::size_t> steps(dims.n_tasks, hyper.episode_length);
        bool running = true;
        while (running) {
            for (std::size_t m = 0; m < dims.n_tasks && running; ++m) {
                if (steps[m] == hyper.episode_length) {
                    states[m] = envs[m].reset(env_rngs[m]);
                    steps[m] = 0;
                }
                bool done = false;
                running = transition(m, states[m], done);
                steps[m] = done ? hyper.episode_length : steps[m] + 1;
            }
        }
    }

    out.models = std::move(model.models);
    return out;
}

}  // namespace

RunOutput run_stlrq(const env::TaskSuite& suite, const Hyperparams& hyper, Rng& rng, const CheckpointSink& sink) {
    return train<JointModel>(suite, hyper, rng, sink);
}

RunOutput run_lrq(const env::TaskSuite& suite, const Hyperparams& hyper, Rng& rng, const CheckpointSink& sink) {
    return train<PerTaskModels>(suite, hyper, rng, sink);
}

RunOutput run_clrq(const env::TaskSuite& suite, const Hyperparams& hyper, Rng& rng, const CheckpointSink& sink) {
    return train<SharedModel>(suite, hyper, rng, sink);
}

RunOutput run_algorithm(Algorithm algo, const env::TaskSuite& suite, const Hyperparams& hyper, Rng& rng,
                        const CheckpointSink& sink) {
    switch (algo) {
        case Algorithm::stlrq: return run_stlrq(suite, hyper, rng, sink);
        case Algorithm::lrq: return run_lrq(suite, hyper, rng, sink);
        case Algorithm::clrq: return run_clrq(suite, hyper, rng, sink);
    }
    throw std::invalid_argument("unknown algorithm");
}

}  // namespace tlrq::learn
