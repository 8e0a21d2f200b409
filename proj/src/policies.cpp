#include "matchplay/policies.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace matchplay::policies {

namespace {

void check_horizon(int horizon) {
    if (horizon < 1) throw InvalidHorizon("horizon must be >= 1, got " + std::to_string(horizon));
    if (horizon > kMaxExactHorizon)
        throw HorizonTooLarge("horizon " + std::to_string(horizon) + " exceeds " +
                              std::to_string(kMaxExactHorizon));
}

bool offense_has_larger_drift(const MatchSpec& spec) noexcept {
    return spec.offense().drift() > spec.defense().drift();
}

// Expected sign of the score after one round from `score` with style `s`.
double one_round_sign(const StyleDistribution& s, int score) noexcept {
    return s.win() * sign(score + 1) + s.draw() * sign(score) + s.loss() * sign(score - 1);
}

}  // namespace

Policy fixed_policy(Action style) {
    return Policy(style == Action::Offense ? "off" : "def",
                  [style](int, int, bool) { return style; });
}

Policy cat_policy() {
    return Policy("cat", [](int, int, bool switched) {
        return switched ? Action::Defense : Action::Offense;
    });
}

Policy cat_plus_policy(const MatchSpec& spec) {
    const Action last_game_at_zero = offense_has_larger_drift(spec) ? Action::Offense : Action::Defense;
    return Policy("catplus", [last_game_at_zero](int games_remaining, int score, bool switched) {
        if (games_remaining == 1 && score == 0) return last_game_at_zero;
        return switched ? Action::Defense : Action::Offense;
    });
}

Policy table_policy(dp::PolicyTable table) {
    return Policy("opt", [table = std::move(table)](int games_remaining, int score, bool) {
        return table.action(games_remaining, score);
    });
}

// --------------------------------------------------------------------------
// AugmentedDistribution
// --------------------------------------------------------------------------

AugmentedDistribution::AugmentedDistribution(int horizon) : horizon_(horizon) {
    check_horizon(horizon);
    const std::size_t cells = 2 * (2 * static_cast<std::size_t>(horizon) + 1);
    mass_.assign(cells, 0.0);
    scratch_.assign(cells, 0.0);
    mass_[index(0, false)] = 1.0;
}

double AugmentedDistribution::mass(int score, bool switched) const noexcept {
    if (std::abs(score) > horizon_) return 0.0;
    return mass_[index(score, switched)];
}

double AugmentedDistribution::total_mass() const noexcept {
    double total = 0.0;
    for (int x = -stage_; x <= stage_; ++x) total += mass_[index(x, false)] + mass_[index(x, true)];
    return total;
}

double AugmentedDistribution::expected_sign() const noexcept {
    double up = 0.0, down = 0.0;
    for (int x = 1; x <= stage_; ++x) {
        up += mass_[index(x, false)] + mass_[index(x, true)];
        down += mass_[index(-x, false)] + mass_[index(-x, true)];
    }
    return up - down;
}

void AugmentedDistribution::advance(const MatchSpec& spec, const Policy& policy) {
    if (stage_ >= horizon_) throw std::logic_error("distribution already at its horizon");
    const int games_remaining = horizon_ - stage_;
    const int n = stage_;
    std::fill(scratch_.begin() + static_cast<std::ptrdiff_t>(index(-n - 1, false)),
              scratch_.begin() + static_cast<std::ptrdiff_t>(index(n + 1, true)) + 1, 0.0);
    for (int x = -n; x <= n; ++x) {
        for (const bool sw : {false, true}) {
            const double m = mass_[index(x, sw)];
            if (m == 0.0) continue;
            const auto& s = spec.style(policy(games_remaining, x, sw));
            scratch_[index(x + 1, next_switched(sw, x + 1))] += m * s.win();
            scratch_[index(x, next_switched(sw, x))] += m * s.draw();
            scratch_[index(x - 1, next_switched(sw, x - 1))] += m * s.loss();
        }
    }
    mass_.swap(scratch_);
    ++stage_;
}

double exact_policy_gain(const MatchSpec& spec, const Policy& policy, int horizon) {
    AugmentedDistribution dist(horizon);
    for (int n = 0; n < horizon; ++n) dist.advance(spec, policy);
    return dist.expected_sign();
}

CatenaccioCurves catenaccio_curves(const MatchSpec& spec, int n_max) {
    check_horizon(n_max);
    const Policy cat = cat_policy();
    const auto& p = spec.offense();
    const auto& q = spec.defense();
    const StyleDistribution& last_at_zero = offense_has_larger_drift(spec) ? p : q;

    CatenaccioCurves out;
    out.cat.reserve(static_cast<std::size_t>(n_max));
    out.cat_plus.reserve(static_cast<std::size_t>(n_max));
    AugmentedDistribution dist(n_max);
    for (int n = 1; n <= n_max; ++n) {
        // Catenaccio+ for horizon n agrees with catenaccio for the first n - 1
        // rounds, so its gain is a one-round lookahead from stage n - 1.
        double plus = 0.0;
        for (int x = -(n - 1); x <= n - 1; ++x) {
            for (const bool sw : {false, true}) {
                const double m = dist.mass(x, sw);
                if (m == 0.0) continue;
                const auto& s = x == 0 ? last_at_zero : (sw ? q : p);
                plus += m * one_round_sign(s, x);
            }
        }
        out.cat_plus.push_back(plus);
        dist.advance(spec, cat);
        out.cat.push_back(dist.expected_sign());
    }
    return out;
}

IdentityReport cat_plus_identity_check(const MatchSpec& spec, int horizon) {
    const auto& c = spec.classification();
    if (!c.safe_defense) throw RegimeNotCovered("identity check requires a safe defense (q_d = 1)");
    if (!(spec.offense().win() < spec.offense().loss()))
        throw RegimeNotCovered("identity check requires a strictly losing offense");
    check_horizon(horizon);

    IdentityReport report;
    report.horizon = horizon;
    report.optimal = dp::optimal_gains(spec, horizon);
    const auto curves = catenaccio_curves(spec, horizon);
    double envelope = 0.0;
    report.max_shortfall = -INFINITY;
    for (int n = 1; n <= horizon; ++n) {
        envelope = std::max(envelope, curves.cat_plus[n - 1]);
        report.cat_plus_envelope.push_back(envelope);
        const double gap = std::fabs(report.optimal[n - 1] - envelope);
        if (gap > report.max_discrepancy) {
            report.max_discrepancy = gap;
            report.worst_horizon = n;
        }
        report.max_shortfall = std::max(report.max_shortfall, envelope - report.optimal[n - 1]);
    }
    return report;
}

}  // namespace matchplay::policies
