#pragma once

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <random>
#include <vector>

namespace tlrq {

/// Seeded pseudo-random stream used by every stochastic component.
///
/// Wraps std::mt19937_64, whose output sequence is fixed by the standard.
/// The conversions to doubles and bounded integers are written out here
/// because the std:: distributions are implementation-defined, and runs
/// must reproduce bit-for-bit from (config, seed) on any toolchain.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Independent stream keyed by several words (seed, stream id, ...).
    static Rng keyed(std::initializer_list<std::uint64_t> key) {
        Rng rng(0);
        std::vector<std::uint32_t> words;
        for (std::uint64_t k : key) {
            words.push_back(static_cast<std::uint32_t>(k));
            words.push_back(static_cast<std::uint32_t>(k >> 32));
        }
        std::seed_seq seq(words.begin(), words.end());
        rng.engine_.seed(seq);
        return rng;
    }

    std::uint64_t next() { return engine_(); }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Uniform integer in [0, n). n must be positive.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
        const std::uint64_t limit = max - (max % n);
        std::uint64_t x = engine_();
        while (x >= limit) x = engine_();
        return x % n;
    }

    bool bernoulli(double p) { return uniform01() < p; }

private:
    std::mt19937_64 engine_;
};

}  // namespace tlrq
