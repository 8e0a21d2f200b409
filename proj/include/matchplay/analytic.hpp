#pragma once

#include <optional>
#include <vector>

#include "matchplay/core.hpp"

namespace matchplay::analytic {

/// Largest horizon accepted by the closed-form fixed-style routines.
inline constexpr int kMaxFixedStyleHorizon = 100000;

/// P(X_N > 0) when every one of the N rounds is played with `style`.
///
/// Evaluated as the trinomial sum over (wins i, losses j), i > j. The sum is
/// factored as Binomial(N, win)(i) * Binomial(N - i, loss / (1 - win))(j);
/// each binomial row is built by ratio updates outward from its mode and
/// normalized, so no factorial or power is ever formed.
double fixed_style_positive_prob(const StyleDistribution& style, int horizon);

/// P(X_N = 0) under a fixed style (the i == j diagonal of the same sum).
double fixed_style_tie_prob(const StyleDistribution& style, int horizon);

/// E[sign(X_N)] under a fixed style.
double fixed_style_gain(const StyleDistribution& style, int horizon);

/// Law of X_N under a fixed style by iterated convolution; entry x + N holds
/// P(X_N = x). Independent O(N^2) route used to cross-check the trinomial sum.
std::vector<double> score_distribution(const StyleDistribution& style, int horizon);

/// E[sign(X_n)] for n = 1..n_max in one convolution pass (index n - 1).
std::vector<double> fixed_style_gain_curve(const StyleDistribution& style, int n_max);

/// Probability that the score walk started at 0 ever reaches +1 under the
/// offensive style alone: min(1, win / loss), with win = 0 giving 0 and
/// loss = 0 < win giving 1.
double hitting_probability(const StyleDistribution& offense) noexcept;

/// Limit of the catenaccio gain. Safe defense: 2 h - 1; fair non-safe
/// defense: h - 1, with h the hitting probability. Other regimes and
/// non-weak players throw RegimeNotCovered.
double cat_limit(const MatchSpec& spec);

enum class Regime { BothStrictlyLosing, FairNonSafe, SafeDefense };

const char* to_string(Regime r) noexcept;

struct AsymptoticVerdict {
    Regime regime;
    double optimal_limit;
    std::optional<double> cat_limit;
};

/// Limit of the optimal gain for a weak player with a strictly losing
/// offense. Throws RegimeNotCovered outside the three classified cases.
AsymptoticVerdict optimal_limit(const MatchSpec& spec);

}  // namespace matchplay::analytic
