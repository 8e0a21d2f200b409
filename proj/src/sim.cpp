#include "matchplay/sim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <thread>
#include <vector>

namespace matchplay::sim {

namespace {

struct Counts {
    std::int64_t wins = 0;
    std::int64_t draws = 0;
    std::int64_t losses = 0;
};

Counts run_range(const MatchSpec& spec, const policies::Policy& policy, int horizon, std::uint64_t seed,
                 std::int64_t begin, std::int64_t end) {
    Counts c;
    for (std::int64_t s = begin; s < end; ++s) {
        SampleStream stream(seed, static_cast<std::uint64_t>(s));
        const int outcome = simulate_match(spec, policy, horizon, stream);
        if (outcome > 0) ++c.wins;
        else if (outcome < 0) ++c.losses;
        else ++c.draws;
    }
    return c;
}

}  // namespace

int sample_round(const StyleDistribution& style, double u) noexcept {
    if (u < style.win()) return 1;
    if (u < style.win() + style.draw()) return 0;
    return -1;
}

int simulate_match(const MatchSpec& spec, const policies::Policy& policy, int horizon, SampleStream& stream) {
    if (horizon < 1) throw InvalidHorizon("horizon must be >= 1, got " + std::to_string(horizon));
    int score = 0;
    bool switched = false;
    for (int played = 0; played < horizon; ++played) {
        const Action a = policy(horizon - played, score, switched);
        score += sample_round(spec.style(a), stream.next_uniform());
        switched = policies::next_switched(switched, score);
    }
    return sign(score);
}

SimEstimate estimate_gain(const MatchSpec& spec, const policies::Policy& policy, int horizon,
                          std::int64_t samples, std::uint64_t seed, unsigned workers) {
    if (horizon < 1) throw InvalidHorizon("horizon must be >= 1, got " + std::to_string(horizon));
    if (samples < 1) throw InvalidSampleCount("samples must be >= 1");
    workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(std::min<std::int64_t>(samples, 256))));

    Counts total;
    if (workers == 1) {
        total = run_range(spec, policy, horizon, seed, 0, samples);
    } else {
        std::vector<Counts> parts(workers);
        std::vector<std::thread> threads;
        threads.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            const std::int64_t begin = samples * w / workers;
            const std::int64_t end = samples * (w + 1) / workers;
            threads.emplace_back([&, w, begin, end] {
                parts[w] = run_range(spec, policy, horizon, seed, begin, end);
            });
        }
        for (auto& t : threads) t.join();
        for (const auto& p : parts) {
            total.wins += p.wins;
            total.draws += p.draws;
            total.losses += p.losses;
        }
    }

    SimEstimate est;
    est.samples = samples;
    est.seed = seed;
    est.wins = total.wins;
    est.draws = total.draws;
    est.losses = total.losses;
    const auto n = static_cast<double>(samples);
    est.mean = static_cast<double>(total.wins - total.losses) / n;
    if (samples == 1) {
        est.std_error = std::numeric_limits<double>::quiet_NaN();
    } else {
        const double decisive = static_cast<double>(total.wins + total.losses);
        const double variance = std::max(0.0, (decisive - n * est.mean * est.mean) / (n - 1.0));
        est.std_error = std::sqrt(variance / n);
    }
    return est;
}

}  // namespace matchplay::sim
