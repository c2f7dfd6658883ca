#include "tlrq/harness/aggregate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <tuple>

#include <boost/math/distributions/students_t.hpp>

namespace tlrq::harness {

std::vector<SummaryRow> aggregate(std::span<const Record> records) {
    if (records.empty()) throw std::invalid_argument("cannot aggregate an empty result");
    std::map<std::tuple<std::string, std::size_t, std::uint64_t>, std::vector<double>> groups;
    for (const Record& r : records) groups[{r.algorithm, r.task, r.iteration}].push_back(r.value);

    std::vector<SummaryRow> rows;
    rows.reserve(groups.size());
    for (const auto& [key, values] : groups) {
        SummaryRow row;
        std::tie(row.algorithm, row.task, row.iteration) = key;
        row.count = values.size();
        double sum = 0.0;
        for (double v : values) sum += v;
        row.mean = sum / static_cast<double>(row.count);
        if (row.count > 1) {
            double sq = 0.0;
            for (double v : values) sq += (v - row.mean) * (v - row.mean);
            row.stddev = std::sqrt(sq / static_cast<double>(row.count - 1));
        }
        const double half = 1.96 * row.stddev / std::sqrt(static_cast<double>(row.count));
        row.lower = row.mean - half;
        row.upper = row.mean + half;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<CurvePoint> mean_curve(std::span<const SummaryRow> rows, std::string_view algorithm, std::size_t task) {
    std::vector<CurvePoint> curve;
    for (const SummaryRow& r : rows) {
        if (r.algorithm == algorithm && r.task == task) curve.push_back({r.iteration, r.mean});
    }
    std::sort(curve.begin(), curve.end(), [](const CurvePoint& a, const CurvePoint& b) { return a.iteration < b.iteration; });
    return curve;
}

std::optional<std::uint64_t> first_reaching(std::span<const CurvePoint> curve, double threshold) {
    for (const CurvePoint& p : curve) {
        if (p.mean >= threshold) return p.iteration;
    }
    return std::nullopt;
}

std::vector<double> final_values(std::span<const Record> records, std::string_view algorithm, std::size_t task) {
    std::map<std::uint64_t, std::pair<std::uint64_t, double>> last;  // seed -> (iteration, value)
    for (const Record& r : records) {
        if (r.algorithm != algorithm || r.task != task) continue;
        auto it = last.find(r.seed);
        if (it == last.end() || r.iteration >= it->second.first) last[r.seed] = {r.iteration, r.value};
    }
    std::vector<double> out;
    out.reserve(last.size());
    for (const auto& [seed, entry] : last) out.push_back(entry.second);
    return out;
}

PairedTest paired_t_test_greater(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw std::invalid_argument("paired test needs samples of equal size");
    if (a.size() < 2) throw std::invalid_argument("paired test needs at least two pairs");
    PairedTest out;
    out.n = a.size();
    std::vector<double> d(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
    double sum = 0.0;
    for (double x : d) sum += x;
    out.mean_difference = sum / static_cast<double>(out.n);
    double sq = 0.0;
    for (double x : d) sq += (x - out.mean_difference) * (x - out.mean_difference);
    const double se = std::sqrt(sq / static_cast<double>(out.n - 1)) / std::sqrt(static_cast<double>(out.n));
    if (se == 0.0) {
        out.t_statistic = out.mean_difference > 0 ? std::numeric_limits<double>::infinity()
                          : out.mean_difference < 0 ? -std::numeric_limits<double>::infinity()
                                                    : 0.0;
        out.p_value = out.mean_difference > 0 ? 0.0 : out.mean_difference < 0 ? 1.0 : 0.5;
        return out;
    }
    out.t_statistic = out.mean_difference / se;
    const boost::math::students_t dist(static_cast<double>(out.n - 1));
    out.p_value = boost::math::cdf(boost::math::complement(dist, out.t_statistic));
    return out;
}

}  // namespace tlrq::harness
