#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tlrq/harness/aggregate.hpp"
#include "tlrq/harness/experiment.hpp"

namespace tlrq::harness {

/// Shortest decimal text that parses back to exactly `x`.
std::string format_double(double x);

/// Header `algorithm,seed,task,iteration,return`, then one row per record
/// in (algorithm, seed, task, iteration) order.
std::string to_csv(std::span<const Record> records);

/// Inverse of to_csv. Throws std::invalid_argument naming the line on
/// malformed input.
std::vector<Record> parse_csv(std::string_view text);

std::string summary_to_csv(std::span<const SummaryRow> rows);

/// File variants; I/O failures throw std::runtime_error naming the path.
void write_csv(std::span<const Record> records, const std::filesystem::path& path);
std::vector<Record> read_csv(const std::filesystem::path& path);
void write_summary_csv(std::span<const SummaryRow> rows, const std::filesystem::path& path);

/// SVG chart of one task: every algorithm's mean curve over its band.
std::string task_plot_svg(std::span<const SummaryRow> rows, std::size_t task);

/// Writes `task{m}.svg` into `dir` for every task present in `rows`, and
/// returns the paths written.
std::vector<std::filesystem::path> write_plots(std::span<const SummaryRow> rows, const std::filesystem::path& dir);

}  // namespace tlrq::harness
