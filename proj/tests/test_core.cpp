#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "matchplay/core.hpp"
#include "matchplay/verify.hpp"

using namespace matchplay;

TEST_CASE("make_distribution validates its inputs") {
    const auto off = make_distribution(0.45, 0.0, 0.55);
    CHECK(off.win() == 0.45);
    CHECK(off.loss() == 0.55);

    const auto safe = make_distribution(0.0, 1.0, 0.0);
    CHECK(safe.draw() == 1.0);

    CHECK_THROWS_AS(make_distribution(0.5, 0.2, 0.5), InvalidProbability);
    CHECK_THROWS_AS(make_distribution(-0.1, 0.6, 0.5), InvalidProbability);
    CHECK_THROWS_AS(make_distribution(1.1, 0.0, -0.1), InvalidProbability);
    CHECK_THROWS_AS(make_distribution(std::nan(""), 0.5, 0.5), InvalidProbability);
    // 1e-12 slack on the sum, nothing more
    CHECK_NOTHROW(make_distribution(0.3, 0.3, 0.4 + 5e-13));
    CHECK_THROWS_AS(make_distribution(0.3, 0.3, 0.4 + 5e-12), InvalidProbability);
}

TEST_CASE("MatchSpec enforces the defensive convention") {
    CHECK_THROWS_AS(make_spec(0.2, 0.5, 0.3, 0.3, 0.4, 0.3), DefensiveConventionViolated);
    CHECK_NOTHROW(make_spec(0.2, 0.5, 0.3, 0.2, 0.5, 0.3));
}

TEST_CASE("classify: chess vignette is strictly weak with an unfair defense") {
    const auto spec = make_spec(0.45, 0, 0.55, 0.10, 0.75, 0.15);
    const auto c = spec.classification();
    CHECK(c.weak);
    CHECK(c.strictly_weak);
    CHECK_FALSE(c.fair_defense);
    CHECK_FALSE(c.safe_defense);
    CHECK(spec.offense().drift() == doctest::Approx(-0.10).epsilon(1e-12));
    CHECK(spec.defense().drift() == doctest::Approx(-0.05).epsilon(1e-12));
}

TEST_CASE("classify: safe defense is also fair") {
    const auto c = make_spec(0.45, 0, 0.55, 0, 1, 0).classification();
    CHECK(c.weak);
    CHECK(c.safe_defense);
    CHECK(c.fair_defense);
    CHECK_FALSE(c.fair_non_safe);
}

TEST_CASE("classify: fair non-safe defense is weak but not strictly weak") {
    const auto c = make_spec(0.4, 0, 0.6, 0.15, 0.7, 0.15).classification();
    CHECK(c.fair_non_safe);
    CHECK(c.weak);
    CHECK_FALSE(c.strictly_weak);
}

TEST_CASE("classify flags respect their implications and are idempotent") {
    verify::SpecSampler sampler(11);
    for (int i = 0; i < 500; ++i) {
        const auto p = sampler.style();
        const auto q = sampler.style();
        if (q.draw() < p.draw()) continue;
        const MatchSpec spec(p, q);
        const auto c = classify(spec);
        CHECK(c == spec.classification());
        CHECK(c == classify(MatchSpec(p, q)));
        if (c.strictly_weak) CHECK(c.weak);
        if (c.safe_defense) CHECK(c.fair_defense);
        CHECK(c.fair_non_safe == (c.fair_defense && !c.safe_defense));
        if (c.weak) CHECK(q.win() <= p.loss() + 1e-12);
    }
}

TEST_CASE("dominates") {
    CHECK(dominates(make_distribution(0.2, 0.6, 0.2), make_distribution(0.1, 0.7, 0.2)));
    const auto a = make_distribution(0.3, 0.3, 0.4);
    CHECK(dominates(a, a));
    CHECK_FALSE(dominates(make_distribution(0.2, 0.5, 0.3), make_distribution(0.1, 0.8, 0.1)));
}

TEST_CASE("dominates is reflexive and transitive on generated styles") {
    verify::SpecSampler sampler(7);
    std::vector<StyleDistribution> styles;
    for (int i = 0; i < 60; ++i) styles.push_back(sampler.style());
    for (const auto& a : styles) {
        CHECK(dominates(a, a));
        for (const auto& b : styles)
            for (const auto& c : styles)
                if (dominates(a, b) && dominates(b, c)) CHECK(dominates(a, c));
    }
}

TEST_CASE("MatchState bounds the score by the round") {
    CHECK_NOTHROW(MatchState(3, -3));
    CHECK_THROWS(MatchState(2, 3));
    CHECK_THROWS_AS(MatchState(-1, 0), InvalidHorizon);
}

TEST_CASE("mirrored swaps win and loss") {
    const auto s = make_distribution(0.1, 0.75, 0.15).mirrored();
    CHECK(s.win() == 0.15);
    CHECK(s.draw() == 0.75);
    CHECK(s.loss() == 0.1);
}
