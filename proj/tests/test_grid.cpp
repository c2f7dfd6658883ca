#include <gtest/gtest.h>

#include <array>
#include <set>

#include "tlrq/env/grid.hpp"

using namespace tlrq::env;

TEST(Grid, OneDimensionalTwoBins) {
    const DiscretizationGrid g({{-1.0, 1.0, 2}});
    const std::array<double, 1> lo{-0.5}, hi{0.5};
    EXPECT_EQ(flat_index(g, lo), 0u);
    EXPECT_EQ(flat_index(g, hi), 1u);
}

TEST(Grid, ClampsOutOfRange) {
    const DiscretizationGrid g({{-1.0, 1.0, 4}});
    const std::array<double, 1> below{-7.0}, above{7.0}, top{1.0};
    EXPECT_EQ(flat_index(g, below), 0u);
    EXPECT_EQ(flat_index(g, above), 3u);
    EXPECT_EQ(flat_index(g, top), 3u);
}

TEST(Grid, RowMajorComposition) {
    const DiscretizationGrid g({{0.0, 3.0, 3}, {0.0, 4.0, 4}});
    const std::array<double, 2> p{2.5, 1.5};  // bins (2, 1)
    EXPECT_EQ(flat_index(g, p), 9u);
    const std::array<std::size_t, 2> digits{2, 1}, radices{3, 4};
    EXPECT_EQ(mixed_radix(digits, radices), 9u);
}

TEST(Grid, RejectsDegenerateAxes) {
    EXPECT_THROW(DiscretizationGrid({{0.0, 1.0, 1}}), std::invalid_argument);
    EXPECT_THROW(DiscretizationGrid({{1.0, 1.0, 3}}), std::invalid_argument);
    EXPECT_THROW(DiscretizationGrid({}), std::invalid_argument);
}

TEST(Grid, SurjectiveOverCellCentersAndConstantWithinCells) {
    const DiscretizationGrid g({{-3.0, 3.0, 5}, {-8.0, 8.0, 7}, {0.0, 1.0, 3}});
    std::set<std::size_t> seen;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const std::vector<double> c = g.cell_center(i);
        EXPECT_EQ(g.flat_index(c), i);
        seen.insert(g.flat_index(c));
        // Points displaced by less than half a cell width stay in the cell.
        std::vector<double> p = c;
        for (std::size_t d = 0; d < p.size(); ++d) {
            const auto& ax = g.axes()[d];
            p[d] += 0.49 * (ax.upper - ax.lower) / static_cast<double>(ax.bins);
        }
        EXPECT_EQ(g.flat_index(p), i);
    }
    EXPECT_EQ(seen.size(), g.size());
}

TEST(Linspace, EndpointsAndSpacing) {
    const auto v = linspace(-2.0, 2.0, 10);
    ASSERT_EQ(v.size(), 10u);
    EXPECT_EQ(v.front(), -2.0);
    EXPECT_EQ(v.back(), 2.0);
    for (std::size_t i = 1; i < v.size(); ++i) EXPECT_NEAR(v[i] - v[i - 1], 4.0 / 9.0, 1e-12);
}
