#include "tlrq/harness/evaluate.hpp"

#include <stdexcept>

namespace tlrq::harness {

double evaluate_policy(const std::function<std::size_t(std::size_t)>& policy, env::Environment& env,
                       std::size_t horizon, std::size_t episodes, Rng& rng, std::optional<double> discount) {
    if (episodes == 0) throw std::invalid_argument("evaluation needs at least one episode");
    double total = 0.0;
    for (std::size_t e = 0; e < episodes; ++e) {
        std::size_t state = env.reset(rng);
        double weight = 1.0;
        double episode_return = 0.0;
        for (std::size_t t = 0; t < horizon; ++t) {
            const env::StepResult step = env.step(policy(state), rng);
            episode_return += weight * step.reward;
            if (discount) weight *= *discount;
            state = step.next_state;
            if (step.done) break;
        }
        total += episode_return;
    }
    return total / static_cast<double>(episodes);
}

double evaluate_policy(const learn::PolicyView& policy, std::size_t task, env::Environment& env,
                       std::size_t horizon, std::size_t episodes, Rng& rng, std::optional<double> discount) {
    return evaluate_policy([&](std::size_t s) { return policy.greedy(task, s); }, env, horizon, episodes, rng,
                           discount);
}

}  // namespace tlrq::harness
