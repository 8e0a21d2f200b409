#include <cmath>

#include "doctest.h"
#include "matchplay/analytic.hpp"
#include "matchplay/verify.hpp"
#include "support/enumerate.hpp"

using namespace matchplay;
using namespace matchplay::analytic;

TEST_CASE("fixed_style_positive_prob: closed cases") {
    CHECK(fixed_style_positive_prob(make_distribution(1, 0, 0), 5) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(fixed_style_positive_prob(make_distribution(0.5, 0, 0.5), 2) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(fixed_style_positive_prob(make_distribution(0, 1, 0), 7) == 0.0);
    CHECK(fixed_style_positive_prob(make_distribution(0, 0.5, 0.5), 7) == 0.0);
}

TEST_CASE("fixed_style_positive_prob: defense of the chess vignette at N=3") {
    // 787/4000 from exact enumeration of all 27 sequences (tests/oracles/derive_values.py)
    const auto q = make_distribution(0.10, 0.75, 0.15);
    CHECK(std::fabs(fixed_style_positive_prob(q, 3) - 0.19675) < 1e-15);
    CHECK(std::fabs(testing::enumerate_fixed_style(q, 3).positive - 0.19675) < 1e-15);
}

TEST_CASE("fixed_style_positive_prob agrees with sequence enumeration for N <= 8") {
    verify::SpecSampler sampler(3);
    for (int trial = 0; trial < 25; ++trial) {
        const auto s = sampler.style();
        for (int n = 1; n <= 8; ++n) {
            const auto m = testing::enumerate_fixed_style(s, n);
            CHECK(std::fabs(fixed_style_positive_prob(s, n) - m.positive) <= 1e-12);
            CHECK(std::fabs(fixed_style_tie_prob(s, n) - m.zero) <= 1e-12);
        }
    }
}

TEST_CASE("positive, negative, and tie probabilities sum to one") {
    verify::SpecSampler sampler(5);
    for (int trial = 0; trial < 20; ++trial) {
        const auto s = sampler.style();
        for (int n : {1, 2, 9, 50, 333, 1000}) {
            const double total = fixed_style_positive_prob(s, n) + fixed_style_positive_prob(s.mirrored(), n) +
                                 fixed_style_tie_prob(s, n);
            CHECK(std::fabs(total - 1.0) <= 1e-10);
        }
    }
}

TEST_CASE("trinomial sum matches the convolution route") {
    verify::SpecSampler sampler(9);
    for (int trial = 0; trial < 10; ++trial) {
        const auto s = sampler.style();
        for (int n : {1, 4, 17, 120, 600}) {
            const auto dist = score_distribution(s, n);
            double up = 0, down = 0;
            for (int x = 1; x <= n; ++x) {
                up += dist[n + x];
                down += dist[n - x];
            }
            CHECK(std::fabs(fixed_style_positive_prob(s, n) - up) <= 1e-12);
            CHECK(std::fabs(fixed_style_gain(s, n) - (up - down)) <= 1e-12);
        }
    }
}

TEST_CASE("fixed_style_positive_prob stays accurate at N = 10000") {
    // Relative agreement with the independent convolution path.
    for (const auto& s : {make_distribution(0.49, 0, 0.51), make_distribution(0.02, 0.95, 0.03),
                          make_distribution(0.3, 0.4, 0.3)}) {
        const int n = 10000;
        const auto dist = score_distribution(s, n);
        double up = 0;
        for (int x = 1; x <= n; ++x) up += dist[n + x];
        CHECK(std::fabs(fixed_style_positive_prob(s, n) - up) <= 1e-10 * up);
    }
}

TEST_CASE("fixed_style_gain: vignette one-game gains and symmetric styles") {
    CHECK(fixed_style_gain(make_distribution(0.45, 0, 0.55), 1) == doctest::Approx(-0.10).epsilon(1e-12));
    CHECK(fixed_style_gain(make_distribution(0.10, 0.75, 0.15), 1) == doctest::Approx(-0.05).epsilon(1e-12));
    for (int n = 1; n <= 60; ++n) CHECK(fixed_style_gain(make_distribution(0.2, 0.6, 0.2), n) == 0.0);
}

TEST_CASE("a losing style has negative gain for every N <= 200") {
    verify::SpecSampler sampler(13);
    int tested = 0;
    while (tested < 15) {
        const auto s = sampler.style();
        if (!(s.win() < s.loss())) continue;
        ++tested;
        const auto curve = fixed_style_gain_curve(s, 200);
        for (int n = 1; n <= 200; ++n) {
            CHECK(curve[n - 1] < 0.0);
            if (n % 37 == 0) CHECK(std::fabs(curve[n - 1] - fixed_style_gain(s, n)) <= 1e-12);
        }
    }
}

TEST_CASE("fixed-style routines reject bad horizons") {
    const auto s = make_distribution(0.3, 0.3, 0.4);
    CHECK_THROWS_AS(fixed_style_positive_prob(s, 0), InvalidHorizon);
    CHECK_THROWS_AS(fixed_style_gain(s, -3), InvalidHorizon);
    CHECK_THROWS_AS(fixed_style_gain_curve(s, 0), InvalidHorizon);
}

TEST_CASE("hitting_probability") {
    CHECK(hitting_probability(make_distribution(0.45, 0, 0.55)) == doctest::Approx(0.45 / 0.55).epsilon(1e-15));
    CHECK(hitting_probability(make_distribution(0, 1, 0)) == 0.0);
    CHECK(hitting_probability(make_distribution(0.3, 0.4, 0.3)) == 1.0);
    CHECK(hitting_probability(make_distribution(0.2, 0.8, 0.0)) == 1.0);
    CHECK(hitting_probability(make_distribution(0.6, 0.1, 0.3)) == 1.0);

    verify::SpecSampler sampler(17);
    for (int i = 0; i < 200; ++i) {
        const auto s = sampler.style();
        const double h = hitting_probability(s);
        CHECK(h >= 0.0);
        CHECK(h <= 1.0);
        if (s.win() >= s.loss() && s.loss() > 0) CHECK(h == 1.0);
    }
}

TEST_CASE("cat_limit") {
    CHECK(cat_limit(make_spec(0.45, 0, 0.55, 0, 1, 0)) == doctest::Approx(2 * 0.45 / 0.55 - 1).epsilon(1e-14));
    CHECK(cat_limit(make_spec(0.3, 0, 0.7, 0, 1, 0)) == doctest::Approx(-1.0 / 7.0).epsilon(1e-14));
    CHECK(cat_limit(make_spec(0.45, 0, 0.55, 0.1, 0.8, 0.1)) == doctest::Approx(0.45 / 0.55 - 1).epsilon(1e-14));
    CHECK_THROWS_AS(cat_limit(make_spec(0.45, 0, 0.55, 0.1, 0.75, 0.15)), RegimeNotCovered);
    CHECK_THROWS_AS(cat_limit(make_spec(0.6, 0, 0.4, 0, 1, 0)), RegimeNotCovered);
}

TEST_CASE("optimal_limit covers the three regimes") {
    const auto i = optimal_limit(make_spec(0.4, 0, 0.6, 0.1, 0.7, 0.2));
    CHECK(i.regime == Regime::BothStrictlyLosing);
    CHECK(i.optimal_limit == -1.0);
    CHECK_FALSE(i.cat_limit.has_value());

    const auto ii = optimal_limit(make_spec(0.4, 0, 0.6, 0.15, 0.7, 0.15));
    CHECK(ii.regime == Regime::FairNonSafe);
    CHECK(ii.optimal_limit == 0.0);
    REQUIRE(ii.cat_limit.has_value());
    CHECK(*ii.cat_limit == doctest::Approx(-1.0 / 3.0).epsilon(1e-14));

    const auto iii = optimal_limit(make_spec(0.3, 0, 0.7, 0, 1, 0));
    CHECK(iii.regime == Regime::SafeDefense);
    CHECK(iii.optimal_limit == 0.0);
    REQUIRE(iii.cat_limit.has_value());
    CHECK(*iii.cat_limit == doctest::Approx(-1.0 / 7.0).epsilon(1e-14));

    const auto safe_positive = optimal_limit(make_spec(0.45, 0, 0.55, 0, 1, 0));
    CHECK(safe_positive.optimal_limit == doctest::Approx(2 * 0.45 / 0.55 - 1).epsilon(1e-14));

    CHECK_THROWS_AS(optimal_limit(make_spec(0.5, 0, 0.5, 0.1, 0.7, 0.2)), RegimeNotCovered);
    CHECK_THROWS_AS(optimal_limit(make_spec(0.6, 0, 0.4, 0.1, 0.7, 0.2)), RegimeNotCovered);
}
