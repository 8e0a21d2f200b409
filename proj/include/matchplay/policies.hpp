#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "matchplay/core.hpp"
#include "matchplay/dp.hpp"

namespace matchplay::policies {

/// Longest horizon accepted by forward policy evaluation.
inline constexpr int kMaxExactHorizon = 100000;

/// Deterministic decision rule over (games remaining, score, switched).
/// `switched` latches the first time the score reaches +1.
class Policy {
public:
    using Decision = std::function<Action(int games_remaining, int score, bool switched)>;

    Policy(std::string name, Decision decide) : name_(std::move(name)), decide_(std::move(decide)) {}

    Action operator()(int games_remaining, int score, bool switched) const {
        return decide_(games_remaining, score, switched);
    }
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
    Decision decide_;
};

/// Updated hitting flag after a round that ended at `score`.
constexpr bool next_switched(bool switched, int score) noexcept { return switched || score == 1; }

Policy fixed_policy(Action style);

/// Catenaccio: Offense until the score first reaches +1, Defense afterwards.
Policy cat_policy();

/// Catenaccio except at one game left with score 0, where it plays the
/// style with the larger drift (Offense only on a strict improvement).
Policy cat_plus_policy(const MatchSpec& spec);

/// Plays the actions recorded in an optimal policy table.
Policy table_policy(dp::PolicyTable table);

/// Probability mass over (score, switched) after some number of rounds.
class AugmentedDistribution {
public:
    explicit AugmentedDistribution(int horizon);

    int horizon() const noexcept { return horizon_; }
    int stage() const noexcept { return stage_; }

    double mass(int score, bool switched) const noexcept;
    double total_mass() const noexcept;
    /// E[sign(X_n)] at the current stage n.
    double expected_sign() const noexcept;

    /// Plays one round under `policy`. Throws std::logic_error past the horizon.
    void advance(const MatchSpec& spec, const Policy& policy);

private:
    std::size_t index(int score, bool switched) const noexcept {
        return 2 * static_cast<std::size_t>(score + horizon_) + (switched ? 1 : 0);
    }

    int horizon_;
    int stage_ = 0;
    std::vector<double> mass_;
    std::vector<double> scratch_;
};

/// Exact E[sign(X_N)] under `policy` by forward propagation, O(N^2).
double exact_policy_gain(const MatchSpec& spec, const Policy& policy, int horizon);

/// Catenaccio and catenaccio+ gains for N = 1..n_max from one forward pass.
struct CatenaccioCurves {
    std::vector<double> cat;
    std::vector<double> cat_plus;
};
CatenaccioCurves catenaccio_curves(const MatchSpec& spec, int n_max);

struct IdentityReport {
    int horizon = 0;
    /// max over n <= N of |g*_n - max(0, max_{m<=n} g^{cat+}_m)|
    double max_discrepancy = 0.0;
    int worst_horizon = 1;
    /// max over n <= N of (envelope - g*_n); never above rounding noise,
    /// since each delayed catenaccio+ is an admissible policy.
    double max_shortfall = 0.0;
    std::vector<double> optimal;
    std::vector<double> cat_plus_envelope;
};

/// Compares the optimal gain with the running maximum of catenaccio+ gains
/// (floored at zero) for every n <= N. Requires a safe defense and a
/// strictly losing offense. The envelope is always a lower bound; equality
/// fails for some offenses, e.g. p = (0.3, 0.2, 0.5) at N = 4, because the
/// optimum re-chooses its effective horizon on each return to score 0.
IdentityReport cat_plus_identity_check(const MatchSpec& spec, int horizon);

}  // namespace matchplay::policies
