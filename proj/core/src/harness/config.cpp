#include "tlrq/harness/config.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace tlrq::harness {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
    throw std::invalid_argument("config " + where + ": " + what);
}

void reject_unknown(const json& j, const std::string& where, std::initializer_list<const char*> allowed) {
    if (!j.is_object()) bad(where, "expected an object");
    const std::set<std::string> keys(allowed.begin(), allowed.end());
    for (const auto& item : j.items()) {
        if (!keys.contains(item.key())) bad(where, "unknown key '" + item.key() + "'");
    }
}

template <class T>
void read(const json& j, const char* key, T& out, const std::string& where) {
    if (!j.contains(key)) return;
    try {
        out = j.at(key).get<T>();
    } catch (const json::exception& e) {
        bad(where + "." + key, e.what());
    }
}

Matrix to_matrix(const json& j, const std::string& where) {
    std::vector<std::vector<double>> rows;
    try {
        rows = j.get<std::vector<std::vector<double>>>();
    } catch (const json::exception& e) {
        bad(where, e.what());
    }
    if (rows.empty() || rows.front().empty()) bad(where, "matrix must be non-empty");
    Matrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.front().size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.front().size()) bad(where, "ragged matrix");
        for (std::size_t k = 0; k < rows[i].size(); ++k) {
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = rows[i][k];
        }
    }
    return m;
}

json from_matrix(const Matrix& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        rows.push_back(std::vector<double>(m.row(i).data(), m.row(i).data() + m.cols()));
    }
    return rows;
}

void parse_hyper(const json& j, learn::Hyperparams& h) {
    const std::string w = "hyperparams";
    reject_unknown(j, w,
                   {"gamma", "epsilon", "rank", "lambdas", "learning_rate", "episode_length", "episodes_per_task",
                    "iterations", "eval_interval", "eval_episodes", "discounted_eval", "grad_clip",
                    "exploratory_target", "interleaved", "init"});
    read(j, "gamma", h.gamma, w);
    read(j, "epsilon", h.epsilon, w);
    read(j, "rank", h.rank, w);
    read(j, "lambdas", h.lambdas, w);
    if (j.contains("learning_rate")) {
        const json& lr = j.at("learning_rate");
        reject_unknown(lr, w + ".learning_rate", {"eta0", "schedule", "decay"});
        read(lr, "eta0", h.lr.eta0, w + ".learning_rate");
        read(lr, "decay", h.lr.decay, w + ".learning_rate");
        std::string schedule = "constant";
        read(lr, "schedule", schedule, w + ".learning_rate");
        if (schedule == "constant") {
            h.lr.kind = learn::ScheduleKind::constant;
        } else if (schedule == "inverse_step") {
            h.lr.kind = learn::ScheduleKind::inverse_step;
        } else {
            bad(w + ".learning_rate.schedule", "expected 'constant' or 'inverse_step'");
        }
    }
    read(j, "episode_length", h.episode_length, w);
    read(j, "episodes_per_task", h.episodes_per_task, w);
    if (j.contains("iterations") && !j.at("iterations").is_null()) {
        std::uint64_t n = 0;
        read(j, "iterations", n, w);
        h.iterations = n;
    }
    if (j.contains("eval_interval") && !j.at("eval_interval").is_null()) {
        std::uint64_t n = 0;
        read(j, "eval_interval", n, w);
        h.eval_interval = n;
    }
    read(j, "eval_episodes", h.eval_episodes, w);
    read(j, "discounted_eval", h.discounted_eval, w);
    if (j.contains("grad_clip")) {
        if (j.at("grad_clip").is_null()) {
            h.grad_clip.reset();
        } else {
            double c = 0.0;
            read(j, "grad_clip", c, w);
            h.grad_clip = c;
        }
    }
    read(j, "exploratory_target", h.exploratory_target, w);
    read(j, "interleaved", h.interleaved, w);
    std::string init = "uniform";
    read(j, "init", init, w);
    if (init == "uniform") {
        h.init = InitKind::uniform01;
    } else if (init == "symmetric") {
        h.init = InitKind::symmetric;
    } else {
        bad(w + ".init", "expected 'uniform' or 'symmetric'");
    }
}

void parse_pendulum(const json& j, env::PendulumSuiteConfig& c) {
    const std::string w = "pendulum";
    reject_unknown(j, w,
                   {"mass", "length", "gravity", "dt", "max_torque", "max_speed", "friction", "theta_bins",
                    "omega_bins", "torque_levels"});
    read(j, "mass", c.masses, w);
    read(j, "length", c.lengths, w);
    read(j, "gravity", c.base.gravity, w);
    read(j, "dt", c.base.dt, w);
    read(j, "max_torque", c.base.max_torque, w);
    read(j, "max_speed", c.base.max_speed, w);
    read(j, "friction", c.base.friction, w);
    read(j, "theta_bins", c.theta_bins, w);
    read(j, "omega_bins", c.omega_bins, w);
    read(j, "torque_levels", c.torque_levels, w);
}

void parse_wireless(const json& j, env::WirelessSuiteConfig& c) {
    const std::string w = "wireless";
    reject_unknown(j, w,
                   {"arrival_size", "harvest_amount", "arrival_prob", "harvest_prob", "fading_levels",
                    "occupancy_prob", "battery_capacity", "queue_capacity", "power_levels", "noise",
                    "battery_weight", "queue_weight", "sense_before_transmit", "battery_bins", "queue_bins"});
    read(j, "arrival_size", c.arrival_sizes, w);
    read(j, "harvest_amount", c.harvest_amounts, w);
    read(j, "arrival_prob", c.arrival_probs, w);
    read(j, "harvest_prob", c.harvest_probs, w);
    read(j, "fading_levels", c.base.fading_levels, w);
    read(j, "occupancy_prob", c.base.occupancy_prob, w);
    read(j, "battery_capacity", c.base.battery_capacity, w);
    read(j, "queue_capacity", c.base.queue_capacity, w);
    read(j, "power_levels", c.base.power_levels, w);
    read(j, "noise", c.base.noise, w);
    read(j, "battery_weight", c.base.battery_weight, w);
    read(j, "queue_weight", c.base.queue_weight, w);
    read(j, "sense_before_transmit", c.base.sense_before_transmit, w);
    read(j, "battery_bins", c.battery_bins, w);
    read(j, "queue_bins", c.queue_bins, w);
}

void parse_chain(const json& j, std::vector<env::ChainMdpSpec>& tasks) {
    const std::string w = "chain";
    reject_unknown(j, w, {"preset", "copies", "tasks"});
    tasks.clear();
    if (j.contains("preset")) {
        std::string preset;
        read(j, "preset", preset, w);
        if (preset != "five_state") bad(w + ".preset", "unknown preset '" + preset + "'");
        std::size_t copies = 1;
        read(j, "copies", copies, w);
        if (copies == 0) bad(w + ".copies", "must be positive");
        for (std::size_t i = 0; i < copies; ++i) tasks.push_back(env::five_state_chain());
    }
    if (j.contains("tasks")) {
        const json& list = j.at("tasks");
        if (!list.is_array()) bad(w + ".tasks", "expected an array");
        for (std::size_t i = 0; i < list.size(); ++i) {
            const std::string wi = w + ".tasks[" + std::to_string(i) + "]";
            reject_unknown(list[i], wi, {"transitions", "rewards", "initial"});
            env::ChainMdpSpec spec;
            if (!list[i].contains("transitions") || !list[i].contains("rewards")) {
                bad(wi, "needs 'transitions' and 'rewards'");
            }
            spec.transitions = to_matrix(list[i].at("transitions"), wi + ".transitions");
            spec.rewards = to_matrix(list[i].at("rewards"), wi + ".rewards");
            read(list[i], "initial", spec.initial, wi);
            tasks.push_back(std::move(spec));
        }
    }
    if (tasks.empty()) bad(w, "needs a preset or an explicit task list");
}

}  // namespace

std::string_view to_string(Family family) {
    switch (family) {
        case Family::pendulum: return "pendulum";
        case Family::wireless: return "wireless";
        case Family::chain: return "chain";
    }
    return "unknown";
}

std::size_t ExperimentConfig::n_tasks() const {
    switch (family) {
        case Family::pendulum: return pendulum.masses.size();
        case Family::wireless: return wireless.arrival_sizes.size();
        case Family::chain: return chain.size();
    }
    return 0;
}

env::TaskSuite ExperimentConfig::build_suite() const {
    switch (family) {
        case Family::pendulum: return env::pendulum_suite(pendulum);
        case Family::wireless: return env::wireless_suite(wireless);
        case Family::chain: {
            std::vector<env::ChainMdpSpec> specs = chain;
            for (auto& s : specs) s.gamma = hyper.gamma;
            return env::chain_suite(specs);
        }
    }
    throw std::invalid_argument("unknown environment family");
}

void ExperimentConfig::validate() const {
    if (replications == 0) throw std::invalid_argument("config: replications must be positive");
    if (threads == 0) throw std::invalid_argument("config: threads must be positive");
    if (algorithms.empty()) throw std::invalid_argument("config: at least one algorithm is required");
    const env::TaskSuite suite = build_suite();
    hyper.validate(suite.size());
}

ExperimentConfig parse_experiment_config(std::string_view json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("config is not valid JSON: ") + e.what());
    }
    reject_unknown(j, "root",
                   {"family", "algorithm", "algorithms", "replications", "base_seed", "threads", "output_dir",
                    "hyperparams", "pendulum", "wireless", "chain"});
    ExperimentConfig c;
    std::string family;
    read(j, "family", family, "root");
    if (family == "pendulum") {
        c.family = Family::pendulum;
    } else if (family == "wireless") {
        c.family = Family::wireless;
    } else if (family == "chain") {
        c.family = Family::chain;
    } else {
        bad("family", "expected pendulum, wireless or chain");
    }

    if (j.contains("algorithm") && j.contains("algorithms")) bad("root", "give either 'algorithm' or 'algorithms'");
    std::vector<std::string> names;
    if (j.contains("algorithm")) {
        std::string one;
        read(j, "algorithm", one, "root");
        names.push_back(one);
    }
    read(j, "algorithms", names, "root");
    if (!names.empty()) {
        c.algorithms.clear();
        for (const auto& n : names) c.algorithms.push_back(learn::parse_algorithm(n));
    }

    read(j, "replications", c.replications, "root");
    read(j, "base_seed", c.base_seed, "root");
    read(j, "threads", c.threads, "root");
    std::string out = c.output_dir.string();
    read(j, "output_dir", out, "root");
    c.output_dir = out;

    if (j.contains("hyperparams")) parse_hyper(j.at("hyperparams"), c.hyper);
    if (j.contains("pendulum")) parse_pendulum(j.at("pendulum"), c.pendulum);
    if (j.contains("wireless")) parse_wireless(j.at("wireless"), c.wireless);
    if (j.contains("chain")) parse_chain(j.at("chain"), c.chain);
    if (c.family == Family::chain && c.chain.empty()) bad("chain", "chain family needs a 'chain' section");
    return c;
}

ExperimentConfig load_experiment_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_experiment_config(buf.str());
}

std::string dump_experiment_config(const ExperimentConfig& c) {
    json j;
    j["family"] = to_string(c.family);
    std::vector<std::string> names;
    for (auto a : c.algorithms) names.emplace_back(learn::to_string(a));
    j["algorithms"] = names;
    j["replications"] = c.replications;
    j["base_seed"] = c.base_seed;
    j["threads"] = c.threads;
    j["output_dir"] = c.output_dir.string();

    const auto& h = c.hyper;
    json hj;
    hj["gamma"] = h.gamma;
    hj["epsilon"] = h.epsilon;
    hj["rank"] = h.rank;
    hj["lambdas"] = h.lambdas;
    hj["learning_rate"] = {{"eta0", h.lr.eta0},
                           {"schedule", h.lr.kind == learn::ScheduleKind::constant ? "constant" : "inverse_step"},
                           {"decay", h.lr.decay}};
    hj["episode_length"] = h.episode_length;
    hj["episodes_per_task"] = h.episodes_per_task;
    hj["iterations"] = h.iterations ? json(*h.iterations) : json(nullptr);
    hj["eval_interval"] = h.eval_interval ? json(*h.eval_interval) : json(nullptr);
    hj["eval_episodes"] = h.eval_episodes;
    hj["discounted_eval"] = h.discounted_eval;
    hj["grad_clip"] = h.grad_clip ? json(*h.grad_clip) : json(nullptr);
    hj["exploratory_target"] = h.exploratory_target;
    hj["interleaved"] = h.interleaved;
    hj["init"] = h.init == InitKind::uniform01 ? "uniform" : "symmetric";
    j["hyperparams"] = hj;

    switch (c.family) {
        case Family::pendulum: {
            const auto& p = c.pendulum;
            j["pendulum"] = {{"mass", p.masses},           {"length", p.lengths},
                             {"gravity", p.base.gravity},  {"dt", p.base.dt},
                             {"max_torque", p.base.max_torque}, {"max_speed", p.base.max_speed},
                             {"friction", p.base.friction}, {"theta_bins", p.theta_bins},
                             {"omega_bins", p.omega_bins}, {"torque_levels", p.torque_levels}};
            break;
        }
        case Family::wireless: {
            const auto& w = c.wireless;
            j["wireless"] = {{"arrival_size", w.arrival_sizes},
                             {"harvest_amount", w.harvest_amounts},
                             {"arrival_prob", w.arrival_probs},
                             {"harvest_prob", w.harvest_probs},
                             {"fading_levels", w.base.fading_levels},
                             {"occupancy_prob", w.base.occupancy_prob},
                             {"battery_capacity", w.base.battery_capacity},
                             {"queue_capacity", w.base.queue_capacity},
                             {"power_levels", w.base.power_levels},
                             {"noise", w.base.noise},
                             {"battery_weight", w.base.battery_weight},
                             {"queue_weight", w.base.queue_weight},
                             {"sense_before_transmit", w.base.sense_before_transmit},
                             {"battery_bins", w.battery_bins},
                             {"queue_bins", w.queue_bins}};
            break;
        }
        case Family::chain: {
            json tasks = json::array();
            for (const auto& s : c.chain) {
                json t = {{"transitions", from_matrix(s.transitions)}, {"rewards", from_matrix(s.rewards)}};
                if (!s.initial.empty()) t["initial"] = s.initial;
                tasks.push_back(t);
            }
            j["chain"] = {{"tasks", tasks}};
            break;
        }
    }
    return j.dump(2);
}

}  // namespace tlrq::harness
