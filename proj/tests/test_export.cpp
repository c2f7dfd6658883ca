#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <vector>

#include "tlrq/harness/aggregate.hpp"
#include "tlrq/harness/export.hpp"

using namespace tlrq;
using namespace tlrq::harness;

namespace {

constexpr char kHeader[] = "algorithm,seed,task,iteration,return\n";

std::vector<Record> three_seeds() {
    return {{"stlrq", 0, 0, 5, 1.0}, {"stlrq", 1, 0, 5, 2.0}, {"stlrq", 2, 0, 5, 4.0},
            {"stlrq", 0, 0, 0, -1.0}, {"stlrq", 1, 0, 0, -1.0}, {"stlrq", 2, 0, 0, -1.0}};
}

}  // namespace

TEST(Csv, EmptyInputIsHeaderOnly) {
    EXPECT_EQ(to_csv({}), kHeader);
    EXPECT_TRUE(parse_csv(kHeader).empty());
}

TEST(Csv, SingleRowLayout) {
    const std::vector<Record> one{{"lrq", 7, 2, 300, -12.5}};
    EXPECT_EQ(to_csv(one), std::string(kHeader) + "lrq,7,2,300,-12.5\n");
}

TEST(Csv, RowsAreOrdered) {
    const std::vector<Record> rows{{"lrq", 1, 0, 10, 1.0}, {"clrq", 0, 0, 0, 2.0}, {"lrq", 0, 1, 0, 3.0},
                                   {"lrq", 0, 0, 10, 4.0}};
    const auto back = parse_csv(to_csv(rows));
    ASSERT_EQ(back.size(), 4u);
    EXPECT_EQ(back[0].algorithm, "clrq");
    EXPECT_EQ(back[1].value, 4.0);
    EXPECT_EQ(back[2].value, 3.0);
    EXPECT_EQ(back[3].value, 1.0);
}

TEST(Csv, RoundTripIsExact) {
    std::vector<Record> rows;
    for (std::uint64_t i = 0; i < 50; ++i) {
        rows.push_back({"stlrq", i, i % 4, i * 100, std::sin(static_cast<double>(i)) * 1e3 / 7.0});
    }
    rows.push_back({"stlrq", 99, 0, 0, std::numeric_limits<double>::infinity()});
    rows.push_back({"stlrq", 99, 1, 0, -std::numeric_limits<double>::infinity()});
    rows.push_back({"stlrq", 99, 2, 0, 5e-324});
    const auto back = parse_csv(to_csv(rows));
    ASSERT_EQ(back.size(), rows.size());
    EXPECT_EQ(to_csv(back), to_csv(rows));
    for (const auto& r : rows) {
        EXPECT_NE(std::find(back.begin(), back.end(), r), back.end()) << r.seed << " " << r.task;
    }
    const auto nan = parse_csv(std::string(kHeader) + "a,0,0,0,nan\n");
    EXPECT_TRUE(std::isnan(nan.at(0).value));
}

TEST(Csv, MalformedInputNamesLine) {
    EXPECT_THROW(parse_csv("algo,seed\n"), std::invalid_argument);
    try {
        parse_csv(std::string(kHeader) + "a,0,0,0,1\na,x,0,0,1\n");
        FAIL();
    } catch (const std::invalid_argument& e) {
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
    }
    EXPECT_THROW(parse_csv(std::string(kHeader) + "a,0,0,0\n"), std::invalid_argument);
    EXPECT_THROW(parse_csv(std::string(kHeader) + "a,0,0,0,1,2\n"), std::invalid_argument);
}

TEST(FormatDouble, ShortestRoundTrip) {
    EXPECT_EQ(format_double(0.1), "0.1");
    EXPECT_EQ(format_double(-250.0), "-250");
    for (double x : {1.0 / 3.0, 1e-300, -123456.789, 2.0 / 7.0 * 1e17}) {
        EXPECT_EQ(std::stod(format_double(x)), x);
    }
}

TEST(Aggregate, MatchesHandComputation) {
    const auto rows = aggregate(three_seeds());
    ASSERT_EQ(rows.size(), 2u);
    EXPECT_EQ(rows[0].iteration, 0u);
    EXPECT_EQ(rows[0].count, 3u);
    EXPECT_EQ(rows[0].stddev, 0.0);
    EXPECT_EQ(rows[0].lower, -1.0);
    EXPECT_EQ(rows[0].upper, -1.0);

    const double mean = 7.0 / 3.0;
    const double sd = std::sqrt(7.0 / 3.0);  // ((4/3)^2 + (1/3)^2 + (5/3)^2) / 2
    const double half = 1.96 * sd / std::sqrt(3.0);
    EXPECT_NEAR(rows[1].mean, mean, 1e-12);
    EXPECT_NEAR(rows[1].stddev, sd, 1e-12);
    EXPECT_NEAR(rows[1].lower, mean - half, 1e-12);
    EXPECT_NEAR(rows[1].upper, mean + half, 1e-12);
}

TEST(Aggregate, SingleSeedHasZeroWidthBand) {
    const std::vector<Record> one{{"lrq", 4, 1, 0, 3.5}};
    const auto rows = aggregate(one);
    ASSERT_EQ(rows.size(), 1u);
    EXPECT_EQ(rows[0].count, 1u);
    EXPECT_EQ(rows[0].stddev, 0.0);
    EXPECT_EQ(rows[0].lower, 3.5);
    EXPECT_EQ(rows[0].upper, 3.5);
    EXPECT_THROW(aggregate(std::vector<Record>{}), std::invalid_argument);
}

TEST(Aggregate, CurvesThresholdsAndFinals) {
    const auto records = three_seeds();
    const auto rows = aggregate(records);
    const auto curve = mean_curve(rows, "stlrq", 0);
    ASSERT_EQ(curve.size(), 2u);
    EXPECT_EQ(first_reaching(curve, -1.0), std::optional<std::uint64_t>(0));
    EXPECT_EQ(first_reaching(curve, 2.0), std::optional<std::uint64_t>(5));
    EXPECT_FALSE(first_reaching(curve, 3.0).has_value());
    EXPECT_TRUE(mean_curve(rows, "lrq", 0).empty());
    EXPECT_EQ(final_values(records, "stlrq", 0), (std::vector<double>{1.0, 2.0, 4.0}));
}

TEST(PairedTTest, MatchesReferenceValues) {
    const std::vector<double> a{1, 2, 3, 4, 5};
    const std::vector<double> b{0.5, 2.1, 2.0, 3.0, 4.9};
    const auto t = paired_t_test_greater(a, b);
    EXPECT_EQ(t.n, 5u);
    EXPECT_NEAR(t.mean_difference, 0.5, 1e-12);
    EXPECT_NEAR(t.t_statistic, 2.2140372138502373, 1e-12);
    EXPECT_NEAR(t.p_value, 0.045607639701663295, 1e-12);
    EXPECT_NEAR(paired_t_test_greater(b, a).p_value, 0.9543923602983367, 1e-12);
}

TEST(PairedTTest, DegenerateCases) {
    const std::vector<double> a{2, 3, 4};
    const std::vector<double> b{1, 2, 3};
    EXPECT_EQ(paired_t_test_greater(a, b).p_value, 0.0);
    EXPECT_EQ(paired_t_test_greater(b, a).p_value, 1.0);
    EXPECT_EQ(paired_t_test_greater(a, a).p_value, 0.5);
    EXPECT_THROW(paired_t_test_greater(a, std::vector<double>{1, 2}), std::invalid_argument);
    EXPECT_THROW(paired_t_test_greater(std::vector<double>{1}, std::vector<double>{0}), std::invalid_argument);
}

TEST(Files, WriteReadAndPlots) {
    const auto dir = std::filesystem::temp_directory_path() / "tlrq_test_export";
    std::filesystem::remove_all(dir);
    const auto records = three_seeds();
    write_csv(records, dir / "nested" / "records.csv");
    EXPECT_EQ(to_csv(read_csv(dir / "nested" / "records.csv")), to_csv(records));

    const auto rows = aggregate(records);
    write_summary_csv(rows, dir / "summary.csv");
    std::ifstream in(dir / "summary.csv");
    std::string header;
    std::getline(in, header);
    EXPECT_EQ(header, "algorithm,task,iteration,count,mean,stddev,lower,upper");

    const auto paths = write_plots(rows, dir / "plots");
    ASSERT_EQ(paths.size(), 1u);
    EXPECT_EQ(paths[0].filename(), "task0.svg");
    const std::string svg = task_plot_svg(rows, 0);
    EXPECT_EQ(svg.rfind("<svg", 0), 0u);
    EXPECT_NE(svg.find("stlrq"), std::string::npos);
    EXPECT_NE(svg.find("</svg>"), std::string::npos);
    std::filesystem::remove_all(dir);
}

TEST(Files, IoErrorsNameThePath) {
    try {
        read_csv("/nonexistent/records.csv");
        FAIL();
    } catch (const std::runtime_error& e) {
        EXPECT_NE(std::string(e.what()).find("/nonexistent/records.csv"), std::string::npos);
    }
    try {
        write_csv(three_seeds(), "/proc/forbidden/records.csv");
        FAIL();
    } catch (const std::exception& e) {
        EXPECT_NE(std::string(e.what()).find("/proc/forbidden"), std::string::npos);
    }
}
