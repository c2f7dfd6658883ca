#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace tlrq::env {

struct Axis {
    double lower = 0.0;
    double upper = 1.0;
    std::size_t bins = 2;
};

/// Uniform box discretization of a continuous space.
///
/// Each coordinate is clamped into [lower, upper] and split into equal-width
/// bins (the upper bound belongs to the last bin). Per-axis bin indices are
/// combined row-major: the last axis varies fastest.
class DiscretizationGrid {
public:
    /// Throws std::invalid_argument unless every axis has bins >= 2 and
    /// lower < upper.
    explicit DiscretizationGrid(std::vector<Axis> axes);

    [[nodiscard]] std::size_t dimensions() const { return axes_.size(); }
    [[nodiscard]] std::size_t size() const { return size_; }
    [[nodiscard]] const std::vector<Axis>& axes() const { return axes_; }

    [[nodiscard]] std::size_t bin(std::size_t axis, double x) const;
    [[nodiscard]] std::size_t flat_index(std::span<const double> point) const;
    /// Midpoint of the cell with the given flat index.
    [[nodiscard]] std::vector<double> cell_center(std::size_t flat) const;

private:
    std::vector<Axis> axes_;
    std::size_t size_ = 1;
};

inline std::size_t flat_index(const DiscretizationGrid& grid, std::span<const double> point) {
    return grid.flat_index(point);
}

/// Row-major composition of already-discrete coordinates.
std::size_t mixed_radix(std::span<const std::size_t> digits, std::span<const std::size_t> radices);

/// `count` evenly spaced values from lo to hi inclusive.
std::vector<double> linspace(double lo, double hi, std::size_t count);

}  // namespace tlrq::env
