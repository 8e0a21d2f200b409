#include "matchplay/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace matchplay::analytic {

namespace {

void check_horizon(int horizon) {
    if (horizon < 1) throw InvalidHorizon("horizon must be >= 1, got " + std::to_string(horizon));
    if (horizon > kMaxFixedStyleHorizon)
        throw HorizonTooLarge("horizon " + std::to_string(horizon) + " exceeds " +
                              std::to_string(kMaxFixedStyleHorizon));
}

// Binomial(n, p) pmf written into out[0..n]. Terms are generated by ratio
// updates from the mode (anchored at 1) and normalized at the end; tails
// that underflow relative to the mode are left at zero.
void binomial_row(int n, double p, std::vector<double>& out) {
    out.assign(static_cast<std::size_t>(n) + 1, 0.0);
    if (p <= 0.0) {
        out[0] = 1.0;
        return;
    }
    if (p >= 1.0) {
        out[static_cast<std::size_t>(n)] = 1.0;
        return;
    }
    const int mode = std::min(n, static_cast<int>(std::floor((n + 1) * p)));
    const double odds = p / (1.0 - p);
    out[mode] = 1.0;
    double sum = 1.0;
    for (int k = mode + 1; k <= n; ++k) {
        const double t = out[k - 1] * (static_cast<double>(n - k + 1) / k) * odds;
        if (t == 0.0) break;
        out[k] = t;
        sum += t;
    }
    for (int k = mode - 1; k >= 0; --k) {
        const double t = out[k + 1] * (static_cast<double>(k + 1) / (n - k)) / odds;
        if (t == 0.0) break;
        out[k] = t;
        sum += t;
    }
    for (auto& v : out) v /= sum;
}

// Shared driver: the trinomial mass of (wins i, losses j) is
// outer[i] * inner_{N-i}[j], with outer ~ Bin(N, w) and
// inner_{N-i} ~ Bin(N - i, l / (l + d)).
template <typename RowFn>
double trinomial_sum(const StyleDistribution& style, int horizon, RowFn&& row_contribution) {
    std::vector<double> outer;
    std::vector<double> inner;
    binomial_row(horizon, style.win(), outer);
    const double undecided = style.loss() + style.draw();
    const double loss_share = undecided > 0.0 ? style.loss() / undecided : 0.0;
    double total = 0.0;
    for (int wins = 0; wins <= horizon; ++wins) {
        if (outer[wins] == 0.0) continue;
        const int rest = horizon - wins;
        binomial_row(rest, loss_share, inner);
        total += outer[wins] * row_contribution(wins, rest, inner);
    }
    return total;
}

}  // namespace

double fixed_style_positive_prob(const StyleDistribution& style, int horizon) {
    check_horizon(horizon);
    const double v = trinomial_sum(style, horizon, [](int wins, int rest, const std::vector<double>& inner) {
        double cdf = 0.0;
        const int last = std::min(wins - 1, rest);
        for (int losses = 0; losses <= last; ++losses) cdf += inner[losses];
        return cdf;
    });
    return std::clamp(v, 0.0, 1.0);
}

double fixed_style_tie_prob(const StyleDistribution& style, int horizon) {
    check_horizon(horizon);
    const double v = trinomial_sum(style, horizon, [](int wins, int rest, const std::vector<double>& inner) {
        return wins <= rest ? inner[wins] : 0.0;
    });
    return std::clamp(v, 0.0, 1.0);
}

double fixed_style_gain(const StyleDistribution& style, int horizon) {
    return fixed_style_positive_prob(style, horizon) -
           fixed_style_positive_prob(style.mirrored(), horizon);
}

std::vector<double> score_distribution(const StyleDistribution& style, int horizon) {
    check_horizon(horizon);
    const std::size_t width = 2 * static_cast<std::size_t>(horizon) + 1;
    std::vector<double> cur(width, 0.0), next(width, 0.0);
    const int origin = horizon;
    cur[origin] = 1.0;
    for (int n = 0; n < horizon; ++n) {
        std::fill(next.begin(), next.end(), 0.0);
        for (int x = -n; x <= n; ++x) {
            const double m = cur[origin + x];
            if (m == 0.0) continue;
            next[origin + x + 1] += m * style.win();
            next[origin + x] += m * style.draw();
            next[origin + x - 1] += m * style.loss();
        }
        cur.swap(next);
    }
    return cur;
}

std::vector<double> fixed_style_gain_curve(const StyleDistribution& style, int n_max) {
    check_horizon(n_max);
    const std::size_t width = 2 * static_cast<std::size_t>(n_max) + 1;
    std::vector<double> cur(width, 0.0), next(width, 0.0);
    std::vector<double> gains;
    gains.reserve(static_cast<std::size_t>(n_max));
    const int origin = n_max;
    cur[origin] = 1.0;
    for (int n = 0; n < n_max; ++n) {
        std::fill(next.begin() + (origin - n - 1), next.begin() + (origin + n + 2), 0.0);
        for (int x = -n; x <= n; ++x) {
            const double m = cur[origin + x];
            if (m == 0.0) continue;
            next[origin + x + 1] += m * style.win();
            next[origin + x] += m * style.draw();
            next[origin + x - 1] += m * style.loss();
        }
        cur.swap(next);
        double up = 0.0, down = 0.0;
        for (int x = 1; x <= n + 1; ++x) {
            up += cur[origin + x];
            down += cur[origin - x];
        }
        gains.push_back(up - down);
    }
    return gains;
}

double hitting_probability(const StyleDistribution& offense) noexcept {
    if (offense.win() <= 0.0) return 0.0;
    if (offense.win() >= offense.loss()) return 1.0;
    return offense.win() / offense.loss();
}

double cat_limit(const MatchSpec& spec) {
    const auto& c = spec.classification();
    if (!c.weak) throw RegimeNotCovered("catenaccio limit requires a weak player");
    if (spec.offense().loss() <= 0.0)
        throw RegimeNotCovered("catenaccio limit requires an offense that can lose");
    const double h = hitting_probability(spec.offense());
    if (c.safe_defense) return 2.0 * h - 1.0;
    if (c.fair_non_safe) return h - 1.0;
    throw RegimeNotCovered("catenaccio limit requires a safe or fair non-safe defense");
}

const char* to_string(Regime r) noexcept {
    switch (r) {
        case Regime::BothStrictlyLosing: return "BothStrictlyLosing";
        case Regime::FairNonSafe: return "FairNonSafe";
        case Regime::SafeDefense: return "SafeDefense";
    }
    return "?";
}

AsymptoticVerdict optimal_limit(const MatchSpec& spec) {
    const auto& c = spec.classification();
    const auto& p = spec.offense();
    const auto& q = spec.defense();
    if (!c.weak) throw RegimeNotCovered("asymptotic classification requires a weak player");
    if (!(p.win() < p.loss() - kProbTolerance))
        throw RegimeNotCovered("asymptotic classification requires a strictly losing offense");

    AsymptoticVerdict v{};
    if (c.safe_defense) {
        v.regime = Regime::SafeDefense;
        v.optimal_limit = std::max(0.0, 2.0 * p.win() / p.loss() - 1.0);
    } else if (c.fair_non_safe) {
        v.regime = Regime::FairNonSafe;
        v.optimal_limit = 0.0;
    } else if (q.win() < q.loss() - kProbTolerance) {
        v.regime = Regime::BothStrictlyLosing;
        v.optimal_limit = -1.0;
    } else {
        throw RegimeNotCovered("defense is neither safe, fair, nor strictly losing");
    }
    if (c.safe_defense || c.fair_non_safe) v.cat_limit = cat_limit(spec);
    return v;
}

}  // namespace matchplay::analytic
