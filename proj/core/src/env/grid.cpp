#include "tlrq/env/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tlrq/contract.hpp"

namespace tlrq::env {

DiscretizationGrid::DiscretizationGrid(std::vector<Axis> axes) : axes_(std::move(axes)) {
    if (axes_.empty()) throw std::invalid_argument("grid needs at least one axis");
    for (const auto& ax : axes_) {
        if (ax.bins < 2) throw std::invalid_argument("grid axes need at least 2 bins");
        if (!(ax.lower < ax.upper)) throw std::invalid_argument("grid axis bounds must satisfy lower < upper");
        size_ *= ax.bins;
    }
}

std::size_t DiscretizationGrid::bin(std::size_t axis, double x) const {
    TLRQ_EXPECTS(axis < axes_.size());
    const Axis& ax = axes_[axis];
    if (std::isnan(x)) x = ax.lower;
    const double clamped = std::clamp(x, ax.lower, ax.upper);
    const double width = (ax.upper - ax.lower) / static_cast<double>(ax.bins);
    const auto b = static_cast<std::size_t>(std::floor((clamped - ax.lower) / width));
    return std::min(b, ax.bins - 1);
}

std::size_t DiscretizationGrid::flat_index(std::span<const double> point) const {
    TLRQ_EXPECTS(point.size() == axes_.size());
    std::size_t flat = 0;
    for (std::size_t d = 0; d < axes_.size(); ++d) flat = flat * axes_[d].bins + bin(d, point[d]);
    return flat;
}

std::vector<double> DiscretizationGrid::cell_center(std::size_t flat) const {
    TLRQ_EXPECTS(flat < size_);
    std::vector<double> center(axes_.size());
    for (std::size_t d = axes_.size(); d-- > 0;) {
        const Axis& ax = axes_[d];
        const std::size_t b = flat % ax.bins;
        flat /= ax.bins;
        const double width = (ax.upper - ax.lower) / static_cast<double>(ax.bins);
        center[d] = ax.lower + (static_cast<double>(b) + 0.5) * width;
    }
    return center;
}

std::size_t mixed_radix(std::span<const std::size_t> digits, std::span<const std::size_t> radices) {
    TLRQ_EXPECTS(digits.size() == radices.size());
    std::size_t flat = 0;
    for (std::size_t d = 0; d < digits.size(); ++d) {
        TLRQ_EXPECTS(digits[d] < radices[d]);
        flat = flat * radices[d] + digits[d];
    }
    return flat;
}

std::vector<double> linspace(double lo, double hi, std::size_t count) {
    if (count == 0) return {};
    if (count == 1) return {lo};
    std::vector<double> out(count);
    for (std::size_t i = 0; i < count; ++i) {
        out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
    }
    out.back() = hi;
    return out;
}

}  // namespace tlrq::env
