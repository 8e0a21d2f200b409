#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "matchplay/analytic.hpp"
#include "matchplay/dp.hpp"
#include "matchplay/verify.hpp"
#include "support/enumerate.hpp"

using namespace matchplay;

namespace {

const MatchSpec kChess = make_spec(0.45, 0, 0.55, 0.10, 0.75, 0.15);
const MatchSpec kLong = make_spec(0.49, 0, 0.51, 0.02, 0.95, 0.03);
const MatchSpec kDraw84 = make_spec(0.43, 0, 0.57, 0.06, 0.84, 0.10);
const MatchSpec kDraw86 = make_spec(0.43, 0, 0.57, 0.06, 0.86, 0.08);

}  // namespace

TEST_CASE("chess vignette at N = 2") {
    const auto sol = dp::solve(kChess, 2);
    CHECK(std::fabs(sol.gain - 0.08) <= 1e-12);
    CHECK(sol.policy.action(2, 0) == Action::Offense);
    CHECK(sol.policy.action(1, 1) == Action::Defense);
    CHECK(sol.policy.action(1, -1) == Action::Offense);
    CHECK(std::fabs(sol.values.value(1, 1) - 0.85) <= 1e-15);
    CHECK(std::fabs(sol.values.value(1, -1) - (-0.55)) <= 1e-15);
}

TEST_CASE("chess vignette at N = 1 plays the better drift") {
    const auto sol = dp::solve(kChess, 1);
    CHECK(std::fabs(sol.gain - (-0.05)) <= 1e-12);
    CHECK(sol.policy.action(1, 0) == Action::Defense);
    CHECK(sol.evaluations == 1);
}

TEST_CASE("long horizon vignette at N = 32") {
    const auto sol = dp::solve(kLong, 32);
    CHECK(std::fabs(sol.gain - 0.453) <= 1e-3);
}

TEST_CASE("pruning skips forced states without changing any value") {
    for (int n : {1, 2, 7, 64, 201}) {
        dp::SolverOptions full;
        full.prune_forced = false;
        const auto pruned = dp::solve(kChess, n);
        const auto unpruned = dp::solve(kChess, n, full);
        CHECK(pruned.values == unpruned.values);
        CHECK(pruned.policy == unpruned.policy);
        CHECK(pruned.gain == unpruned.gain);
        // Up to N = 2 the diamond and the reachable triangle coincide.
        if (n > 2) CHECK(pruned.evaluations < unpruned.evaluations);
        else CHECK(pruned.evaluations == unpruned.evaluations);
    }
    dp::SolverOptions full;
    full.prune_forced = false;
    CHECK(dp::solve(kChess, 64).evaluations == 2112);
    CHECK(dp::solve(kChess, 64, full).evaluations == 4096);
}

TEST_CASE("value table: forced cells, bounds, and unreachable cells") {
    const int n = 12;
    const auto sol = dp::solve(kDraw84, n);
    CHECK(sol.values.value(0, 0) == 0.0);
    CHECK(sol.values.value(0, 5) == 1.0);
    CHECK(sol.values.value(0, -5) == -1.0);
    CHECK(sol.values.value(3, 4) == 1.0);
    CHECK(sol.values.value(3, -4) == -1.0);
    CHECK_THROWS_AS(sol.values.value(n - 2, 3), std::out_of_range);
    CHECK_THROWS_AS(sol.values.value(n + 1, 0), std::out_of_range);
    for (int k = 0; k <= n; ++k)
        for (int x = -(n - k); x <= n - k; ++x) {
            const double v = sol.values.value(k, x);
            CHECK(v >= -1.0);
            CHECK(v <= 1.0);
            if (std::abs(x) > k) CHECK(v == static_cast<double>(sign(x)));
        }
}

TEST_CASE("values are nondecreasing in the score") {
    verify::SpecSampler sampler(21);
    for (int trial = 0; trial < 30; ++trial) {
        const auto spec = sampler.weak_spec();
        const int n = 25;
        const auto sol = dp::solve(spec, n);
        for (int k = 1; k <= n; ++k)
            for (int x = -(n - k); x < n - k; ++x)
                CHECK(sol.values.value(k, x) <= sol.values.value(k, x + 1) + 1e-15);
    }
}

TEST_CASE("solve agrees with history enumeration of its own policy") {
    verify::SpecSampler sampler(23);
    for (int trial = 0; trial < 20; ++trial) {
        const auto spec = sampler.weak_spec();
        for (int n = 1; n <= 7; ++n) {
            const auto sol = dp::solve(spec, n);
            const double g = testing::enumerate_gain(
                spec, n, [&](int k, int x, bool) { return sol.policy.action(k, x); });
            CHECK(std::fabs(g - sol.gain) <= 1e-12);
        }
    }
}

TEST_CASE("optimal_gains matches per-horizon solves") {
    verify::SpecSampler sampler(29);
    for (int trial = 0; trial < 10; ++trial) {
        const auto spec = sampler.weak_spec();
        const auto gains = dp::optimal_gains(spec, 40);
        REQUIRE(gains.size() == 40);
        for (int n : {1, 2, 3, 10, 39, 40}) CHECK(gains[n - 1] == dp::solve(spec, n).gain);
    }
}

TEST_CASE("budgets and bad horizons") {
    CHECK_THROWS_AS(dp::solve(kChess, 0), InvalidHorizon);
    CHECK_THROWS_AS(dp::solve(kChess, 20001), HorizonTooLarge);
    CHECK_THROWS_AS(dp::optimal_gains(kChess, 100001), HorizonTooLarge);
    CHECK_THROWS_AS(dp::optimal_gains(kChess, 0), InvalidHorizon);
    dp::SolverOptions tight;
    tight.max_full_stages = 10;
    CHECK_THROWS_AS(dp::solve(kChess, 11, tight), HorizonTooLarge);
    CHECK_NOTHROW(dp::solve(kChess, 10, tight));
}

TEST_CASE("find_optimal_horizon") {
    const auto best = dp::find_optimal_horizon(kLong, 64);
    CHECK(best.horizon == 32);
    CHECK(std::fabs(best.gain - 0.453) <= 1e-3);

    // Identical styles with negative drift: one game is best.
    const auto lose = dp::find_optimal_horizon(make_spec(0.4, 0, 0.6, 0.4, 0, 0.6), 30);
    CHECK(lose.horizon == 1);
    CHECK(std::fabs(lose.gain - (-0.2)) <= 1e-12);

    // Ties resolve to the smallest horizon.
    const auto frozen = dp::find_optimal_horizon(make_spec(0.3, 0, 0.7, 0, 1, 0), 30);
    CHECK(frozen.gain == 0.0);
    CHECK(frozen.horizon == 1);
}

TEST_CASE("short-horizon parameters: optimal gains against exact fractions") {
    // tests/oracles/derive_values.py
    const double d84[] = {-0.04, 0.0621, 0.042764, 0.07190142, 0.0571165208, 0.063107983425};
    const double d86[] = {-0.02, 0.0707, 0.066066, 0.09475162, 0.0916362812, 0.097222311807};
    const auto gc = dp::optimal_gains(kDraw84, 6);
    const auto gp = dp::optimal_gains(kDraw86, 6);
    for (int i = 0; i < 6; ++i) {
        CHECK(std::fabs(gc[i] - d84[i]) <= 1e-12);
        CHECK(std::fabs(gp[i] - d86[i]) <= 1e-12);
    }
    const auto best = dp::find_optimal_horizon(kDraw84, 20);
    CHECK(best.horizon == 4);
    CHECK(best.gain > 0.0);
    CHECK(dp::find_optimal_horizon(kDraw86, 20).horizon != 4);
}

TEST_CASE("gain_curve columns") {
    const auto curve = dp::gain_curve(kChess, 30);
    REQUIRE(curve.horizons.size() == 30);
    CHECK(curve.horizons.front() == 1);
    CHECK(curve.horizons.back() == 30);
    REQUIRE(curve.series.size() == 5);
    const auto& opt = curve.gains(dp::CurvePolicy::Optimal);
    const auto& off = curve.gains(dp::CurvePolicy::Offense);
    const auto& def = curve.gains(dp::CurvePolicy::Defense);
    const auto& cat = curve.gains(dp::CurvePolicy::Catenaccio);
    const auto& catp = curve.gains(dp::CurvePolicy::CatenaccioPlus);
    CHECK(std::fabs(opt[1] - 0.08) <= 1e-12);
    CHECK(std::fabs(off[1] - (-0.1)) <= 1e-12);
    CHECK(std::fabs(cat[3] - 0.0630125) <= 1e-12);
    for (std::size_t i = 0; i < 30; ++i) {
        CHECK(opt[i] >= std::max({off[i], def[i], cat[i], catp[i]}) - 1e-12);
        CHECK(std::fabs(off[i] - analytic::fixed_style_gain(kChess.offense(), static_cast<int>(i) + 1)) <= 1e-12);
    }

    const auto only = dp::gain_curve(kChess, 3, {dp::CurvePolicy::Defense, dp::CurvePolicy::Optimal});
    REQUIRE(only.series.size() == 2);
    CHECK(only.series[0].policy == dp::CurvePolicy::Defense);
    CHECK_THROWS_AS(only.gains(dp::CurvePolicy::Offense), std::out_of_range);
    CHECK(std::string(dp::column_name(dp::CurvePolicy::CatenaccioPlus)) == "gain_catplus");
}

TEST_CASE("identical styles: optimal column equals the fixed-style column") {
    verify::SpecSampler sampler(31);
    for (int trial = 0; trial < 10; ++trial) {
        const auto s = sampler.style();
        const auto curve = dp::gain_curve(MatchSpec(s, s), 40);
        const auto& opt = curve.gains(dp::CurvePolicy::Optimal);
        const auto& off = curve.gains(dp::CurvePolicy::Offense);
        for (std::size_t i = 0; i < opt.size(); ++i) CHECK(std::fabs(opt[i] - off[i]) <= 1e-12);
    }
}
