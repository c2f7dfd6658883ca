#include <gtest/gtest.h>

#include <limits>

#include <filesystem>
#include <fstream>

#include "tlrq/tensor/snapshot.hpp"

using namespace tlrq;

TEST(Snapshot, RoundTripIsBitExact) {
    const FactorSet fs = new_factor_set({7, 3, 4}, 5, 123, InitKind::symmetric);
    const FactorSet back = from_snapshot(to_snapshot(fs));
    EXPECT_EQ(back, fs);
    EXPECT_EQ(back.seed(), fs.seed());
}

TEST(Snapshot, KeepsAbsentSeed) {
    const FactorSet fs = FactorSet::zeros({2, 2, 1}, 1);
    EXPECT_FALSE(from_snapshot(to_snapshot(fs)).seed().has_value());
}

TEST(Snapshot, FileRoundTrip) {
    const auto path = std::filesystem::temp_directory_path() / "tlrq_snapshot_test.json";
    const FactorSet fs = new_factor_set({3, 2, 2}, 2, 9);
    save_snapshot(fs, path);
    EXPECT_EQ(load_snapshot(path), fs);
    std::filesystem::remove(path);
}

TEST(Snapshot, RejectsMalformedInput) {
    EXPECT_THROW(from_snapshot("not json"), std::invalid_argument);
    EXPECT_THROW(from_snapshot(R"({"format":"other"})"), std::invalid_argument);
    std::string text = to_snapshot(new_factor_set({2, 2, 1}, 1, 1));
    const auto pos = text.find("\"rank\":1");
    ASSERT_NE(pos, std::string::npos);
    text.replace(pos, 8, "\"rank\":2");
    EXPECT_THROW(from_snapshot(text), std::invalid_argument);
}

TEST(Snapshot, MissingFileNamesPath) {
    try {
        load_snapshot("/nonexistent/dir/model.json");
        FAIL() << "expected an exception";
    } catch (const std::exception& e) {
        EXPECT_NE(std::string(e.what()).find("/nonexistent/dir/model.json"), std::string::npos);
    }
}

TEST(Snapshot, RefusesNonFiniteEntries) {
    FactorSet fs = new_factor_set({2, 2, 1}, 1, 3);
    fs.state_row(1)(0) = std::numeric_limits<double>::quiet_NaN();
    EXPECT_THROW(to_snapshot(fs), std::invalid_argument);
    fs.state_row(1)(0) = std::numeric_limits<double>::infinity();
    EXPECT_THROW(to_snapshot(fs), std::invalid_argument);
}
