#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Core>

namespace tlrq {

using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Sizes of the three tensor modes: states, actions, tasks.
struct Dims {
    std::size_t n_states = 0;
    std::size_t n_actions = 0;
    std::size_t n_tasks = 0;

    /// Throws std::invalid_argument if any mode is empty.
    void validate() const;

    friend bool operator==(const Dims&, const Dims&) = default;
};

enum class InitKind {
    uniform01,  // every entry ~ U[0, 1)
    symmetric,  // every entry ~ U[-1, 1)
};

/// Rank-K PARAFAC model of the |S| x |A| x M Q-tensor.
///
/// Holds the state factor matrix (|S| x K), the action factor matrix
/// (|A| x K) and the task factor matrix (M x K). The tensor itself is never
/// stored; entry (s, a, m) is sum_k states(s,k) * actions(a,k) * tasks(m,k).
///
/// Rows can be modified in place through the *_row accessors, which cannot
/// change the shape, so the shared-rank invariant holds for the lifetime of
/// the object.
class FactorSet {
public:
    FactorSet(Matrix states, Matrix actions, Matrix tasks,
              std::optional<std::uint64_t> seed = std::nullopt);

    static FactorSet zeros(const Dims& dims, std::size_t rank);

    [[nodiscard]] Dims dims() const;
    [[nodiscard]] std::size_t rank() const { return static_cast<std::size_t>(states_.cols()); }
    /// Seed the factors were drawn with, when they came from new_factor_set.
    [[nodiscard]] std::optional<std::uint64_t> seed() const { return seed_; }

    [[nodiscard]] const Matrix& states() const { return states_; }
    [[nodiscard]] const Matrix& actions() const { return actions_; }
    [[nodiscard]] const Matrix& tasks() const { return tasks_; }

    auto state_row(std::size_t i) { return states_.row(static_cast<Eigen::Index>(i)); }
    auto action_row(std::size_t i) { return actions_.row(static_cast<Eigen::Index>(i)); }
    auto task_row(std::size_t i) { return tasks_.row(static_cast<Eigen::Index>(i)); }

    /// Column k of every factor matrix multiplied by the given scalars.
    void scale_component(std::size_t k, double state_scale, double action_scale,
                         double task_scale);

    /// Exact (bitwise) equality of all entries and of the shape.
    friend bool operator==(const FactorSet& a, const FactorSet& b);

private:
    Matrix states_;
    Matrix actions_;
    Matrix tasks_;
    std::optional<std::uint64_t> seed_;
};

/// Factors drawn independently from the given init distribution with a
/// generator seeded by `seed`. Throws std::invalid_argument for rank 0 or
/// an empty mode.
FactorSet new_factor_set(const Dims& dims, std::size_t rank, std::uint64_t seed,
                         InitKind init = InitKind::uniform01);

/// Q(s, a, m). Indices outside dims abort.
double evaluate(const FactorSet& fs, std::size_t state, std::size_t action, std::size_t task);

/// The |S| x |A| Q-matrix of one task.
Matrix task_slice(const FactorSet& fs, std::size_t task);

/// Outer product of state column k and action column k.
Matrix rank1_component(const FactorSet& fs, std::size_t k);

/// Dense |S| x |A| x M materialization, for tests and small problems.
class DenseTensor {
public:
    explicit DenseTensor(const Dims& dims) : dims_(dims), values_(dims.n_states * dims.n_actions * dims.n_tasks, 0.0) {}

    [[nodiscard]] const Dims& dims() const { return dims_; }
    double& operator()(std::size_t s, std::size_t a, std::size_t m) { return values_[offset(s, a, m)]; }
    double operator()(std::size_t s, std::size_t a, std::size_t m) const { return values_[offset(s, a, m)]; }

private:
    [[nodiscard]] std::size_t offset(std::size_t s, std::size_t a, std::size_t m) const {
        return (s * dims_.n_actions + a) * dims_.n_tasks + m;
    }

    Dims dims_;
    std::vector<double> values_;
};

DenseTensor reconstruct_full(const FactorSet& fs);

struct GreedyChoice {
    std::size_t action = 0;
    double value = 0.0;
};

/// argmax over actions of Q(state, ., task); the lowest index wins ties.
GreedyChoice greedy_action(const FactorSet& fs, std::size_t state, std::size_t task);

/// Free parameters of a rank-K model, (|S| + |A| + M) * K.
std::size_t dof_count(const Dims& dims, std::size_t rank);

}  // namespace tlrq
