#pragma once

#include <cstdint>

#include "matchplay/core.hpp"
#include "matchplay/policies.hpp"

namespace matchplay::sim {

/// SplitMix64 output function (Steele, Lea & Flood 2014).
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Counter-based random stream for one simulated match. Draw r of sample s
/// under seed S is splitmix64(splitmix64(splitmix64(S) ^ s) ^ r), so any
/// sample can be regenerated independently of every other.
class SampleStream {
public:
    SampleStream(std::uint64_t seed, std::uint64_t sample_index) noexcept
        : key_(splitmix64(splitmix64(seed) ^ sample_index)) {}

    std::uint64_t next_u64() noexcept { return splitmix64(key_ ^ counter_++); }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_uniform() noexcept { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

/// Outcome of one round by inverse CDF: win, then draw, then loss.
/// Returns the score change (+1, 0, -1).
int sample_round(const StyleDistribution& style, double u) noexcept;

/// Plays N rounds under `policy`; returns sign(X_N).
int simulate_match(const MatchSpec& spec, const policies::Policy& policy, int horizon, SampleStream& stream);

struct SimEstimate {
    double mean = 0.0;
    /// Unbiased sample standard deviation over sqrt(samples); NaN when samples == 1.
    double std_error = 0.0;
    std::int64_t samples = 0;
    std::uint64_t seed = 0;
    std::int64_t wins = 0;
    std::int64_t draws = 0;
    std::int64_t losses = 0;
};

/// Monte Carlo estimate of E[sign(X_N)]. Results depend only on the inputs,
/// never on `workers`.
SimEstimate estimate_gain(const MatchSpec& spec, const policies::Policy& policy, int horizon,
                          std::int64_t samples, std::uint64_t seed, unsigned workers = 1);

}  // namespace matchplay::sim
