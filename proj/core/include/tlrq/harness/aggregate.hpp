#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tlrq/harness/experiment.hpp"

namespace tlrq::harness {

/// Across-seed statistics for one (algorithm, task, iteration).
/// The band is mean +- 1.96 * s / sqrt(n) with s the sample standard
/// deviation (zero when n = 1).
struct SummaryRow {
    std::string algorithm;
    std::size_t task = 0;
    std::uint64_t iteration = 0;
    std::size_t count = 0;
    double mean = 0.0;
    double stddev = 0.0;
    double lower = 0.0;
    double upper = 0.0;
};

/// Rows sorted by (algorithm, task, iteration). Throws
/// std::invalid_argument when there are no records.
std::vector<SummaryRow> aggregate(std::span<const Record> records);
inline std::vector<SummaryRow> aggregate(const ExperimentResult& result) { return aggregate(result.records); }

struct CurvePoint {
    std::uint64_t iteration = 0;
    double mean = 0.0;
};

/// Mean-return curve of one algorithm on one task, by iteration.
std::vector<CurvePoint> mean_curve(std::span<const SummaryRow> rows, std::string_view algorithm, std::size_t task);

/// First iteration whose mean reaches `threshold`, if any.
std::optional<std::uint64_t> first_reaching(std::span<const CurvePoint> curve, double threshold);

/// Per-seed value at the largest iteration recorded for (algorithm, task),
/// ordered by seed.
std::vector<double> final_values(std::span<const Record> records, std::string_view algorithm, std::size_t task);

struct PairedTest {
    std::size_t n = 0;
    double mean_difference = 0.0;
    double t_statistic = 0.0;
    /// One-sided p-value for the alternative mean(a - b) > 0.
    double p_value = 1.0;
};

/// Paired Student t-test of a against b. Throws std::invalid_argument for
/// mismatched sizes or fewer than two pairs.
PairedTest paired_t_test_greater(std::span<const double> a, std::span<const double> b);

}  // namespace tlrq::harness
