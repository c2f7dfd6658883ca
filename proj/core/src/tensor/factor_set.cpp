#include "tlrq/tensor/factor_set.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tlrq/contract.hpp"
#include "tlrq/rng.hpp"

namespace tlrq {

namespace {

// Shared kernel so evaluate, task_slice and greedy_action produce the same
// bits for the same entry.
inline double entry(const double* s_row, const double* a_row, const double* m_row,
                    std::size_t rank) {
    double sum = 0.0;
    for (std::size_t k = 0; k < rank; ++k) sum += s_row[k] * a_row[k] * m_row[k];
    return sum;
}

void fill(Matrix& m, Rng& rng, InitKind init) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            m(i, j) = init == InitKind::uniform01 ? rng.uniform01() : rng.uniform(-1.0, 1.0);
        }
    }
}

}  // namespace

void Dims::validate() const {
    if (n_states == 0 || n_actions == 0 || n_tasks == 0) {
        throw std::invalid_argument("tensor dimensions must be positive");
    }
}

FactorSet::FactorSet(Matrix states, Matrix actions, Matrix tasks,
                     std::optional<std::uint64_t> seed)
    : states_(std::move(states)), actions_(std::move(actions)), tasks_(std::move(tasks)), seed_(seed) {
    if (states_.cols() < 1 || states_.cols() != actions_.cols() || states_.cols() != tasks_.cols()) {
        throw std::invalid_argument("factor matrices must share a positive column count");
    }
    if (states_.rows() < 1 || actions_.rows() < 1 || tasks_.rows() < 1) {
        throw std::invalid_argument("factor matrices must have at least one row");
    }
    if (!states_.allFinite() || !actions_.allFinite() || !tasks_.allFinite()) {
        throw std::invalid_argument("factor entries must be finite");
    }
}

FactorSet FactorSet::zeros(const Dims& dims, std::size_t rank) {
    dims.validate();
    if (rank == 0) throw std::invalid_argument("rank must be at least 1");
    const auto k = static_cast<Eigen::Index>(rank);
    return FactorSet(Matrix::Zero(static_cast<Eigen::Index>(dims.n_states), k),
                     Matrix::Zero(static_cast<Eigen::Index>(dims.n_actions), k),
                     Matrix::Zero(static_cast<Eigen::Index>(dims.n_tasks), k));
}

Dims FactorSet::dims() const {
    return {static_cast<std::size_t>(states_.rows()), static_cast<std::size_t>(actions_.rows()),
            static_cast<std::size_t>(tasks_.rows())};
}

void FactorSet::scale_component(std::size_t k, double state_scale, double action_scale,
                                double task_scale) {
    TLRQ_EXPECTS(k < rank());
    const auto c = static_cast<Eigen::Index>(k);
    states_.col(c) *= state_scale;
    actions_.col(c) *= action_scale;
    tasks_.col(c) *= task_scale;
}

bool operator==(const FactorSet& a, const FactorSet& b) {
    auto same = [](const Matrix& x, const Matrix& y) {
        return x.rows() == y.rows() && x.cols() == y.cols() &&
               std::equal(x.data(), x.data() + x.size(), y.data());
    };
    return same(a.states_, b.states_) && same(a.actions_, b.actions_) && same(a.tasks_, b.tasks_);
}

FactorSet new_factor_set(const Dims& dims, std::size_t rank, std::uint64_t seed, InitKind init) {
    FactorSet zero = FactorSet::zeros(dims, rank);
    Matrix states = zero.states();
    Matrix actions = zero.actions();
    Matrix tasks = zero.tasks();
    Rng rng(seed);
    fill(states, rng, init);
    fill(actions, rng, init);
    fill(tasks, rng, init);
    return FactorSet(std::move(states), std::move(actions), std::move(tasks), seed);
}

double evaluate(const FactorSet& fs, std::size_t state, std::size_t action, std::size_t task) {
    const Dims d = fs.dims();
    TLRQ_EXPECTS(state < d.n_states && action < d.n_actions && task < d.n_tasks);
    return entry(fs.states().row(static_cast<Eigen::Index>(state)).data(),
                 fs.actions().row(static_cast<Eigen::Index>(action)).data(),
                 fs.tasks().row(static_cast<Eigen::Index>(task)).data(), fs.rank());
}

Matrix task_slice(const FactorSet& fs, std::size_t task) {
    const Dims d = fs.dims();
    TLRQ_EXPECTS(task < d.n_tasks);
    Matrix out(static_cast<Eigen::Index>(d.n_states), static_cast<Eigen::Index>(d.n_actions));
    const double* m_row = fs.tasks().row(static_cast<Eigen::Index>(task)).data();
    for (Eigen::Index s = 0; s < out.rows(); ++s) {
        const double* s_row = fs.states().row(s).data();
        for (Eigen::Index a = 0; a < out.cols(); ++a) {
            out(s, a) = entry(s_row, fs.actions().row(a).data(), m_row, fs.rank());
        }
    }
    return out;
}

Matrix rank1_component(const FactorSet& fs, std::size_t k) {
    TLRQ_EXPECTS(k < fs.rank());
    const auto c = static_cast<Eigen::Index>(k);
    return fs.states().col(c) * fs.actions().col(c).transpose();
}

DenseTensor reconstruct_full(const FactorSet& fs) {
    const Dims d = fs.dims();
    DenseTensor out(d);
    for (std::size_t s = 0; s < d.n_states; ++s) {
        for (std::size_t a = 0; a < d.n_actions; ++a) {
            for (std::size_t m = 0; m < d.n_tasks; ++m) out(s, a, m) = evaluate(fs, s, a, m);
        }
    }
    return out;
}

GreedyChoice greedy_action(const FactorSet& fs, std::size_t state, std::size_t task) {
    const Dims d = fs.dims();
    TLRQ_EXPECTS(state < d.n_states && task < d.n_tasks);
    const double* s_row = fs.states().row(static_cast<Eigen::Index>(state)).data();
    const double* m_row = fs.tasks().row(static_cast<Eigen::Index>(task)).data();
    GreedyChoice best{0, entry(s_row, fs.actions().row(0).data(), m_row, fs.rank())};
    for (std::size_t a = 1; a < d.n_actions; ++a) {
        const double v =
            entry(s_row, fs.actions().row(static_cast<Eigen::Index>(a)).data(), m_row, fs.rank());
        if (v > best.value) best = {a, v};
    }
    return best;
}

std::size_t dof_count(const Dims& dims, std::size_t rank) {
    return (dims.n_states + dims.n_actions + dims.n_tasks) * rank;
}

}  // namespace tlrq
