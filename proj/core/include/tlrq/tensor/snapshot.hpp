#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "tlrq/tensor/factor_set.hpp"

namespace tlrq {

/// JSON checkpoint of a factor set:
///
///   {"format": "tlrq.factor_set", "version": 1,
///    "dims": {"states": S, "actions": A, "tasks": M}, "rank": K,
///    "seed": <u64 or null>,
///    "states": [S*K numbers], "actions": [A*K numbers], "tasks": [M*K numbers]}
///
/// Matrix entries are row-major. Numbers are written with enough digits to
/// round-trip every double exactly. Throws std::invalid_argument if any
/// entry is NaN or infinite, since JSON cannot carry those.
std::string to_snapshot(const FactorSet& fs);

/// Throws std::invalid_argument on malformed or inconsistent input.
FactorSet from_snapshot(std::string_view text);

void save_snapshot(const FactorSet& fs, const std::filesystem::path& path);
FactorSet load_snapshot(const std::filesystem::path& path);

}  // namespace tlrq
