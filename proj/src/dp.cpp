#include "matchplay/dp.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace matchplay::dp {

namespace {

void check_horizon(int horizon, int budget, const char* mode) {
    if (horizon < 1) throw InvalidHorizon("horizon must be >= 1, got " + std::to_string(horizon));
    if (horizon > budget)
        throw HorizonTooLarge("horizon " + std::to_string(horizon) + " exceeds the " + mode +
                              " budget of " + std::to_string(budget) + " stages");
}

// Expected continuation value of one round played with `s`. Written as a
// correction to the current value so that a constant neighbourhood maps to
// itself exactly; decided states therefore stay at exactly +-1.
inline double backup(const StyleDistribution& s, double down, double stay, double up) noexcept {
    return stay + s.win() * (up - stay) + s.loss() * (down - stay);
}

struct Choice {
    double value;
    Action action;
};

inline Choice bellman(const MatchSpec& spec, double down, double stay, double up) noexcept {
    const double off = backup(spec.offense(), down, stay, up);
    const double def = backup(spec.defense(), down, stay, up);
    if (off > def) return {off, Action::Offense};
    return {def, Action::Defense};
}

// Radius of the states evaluated at stage k of an N-stage pass.
inline int live_radius(int k, int horizon, bool prune) noexcept {
    const int reachable = horizon - k;
    return prune ? std::min(k, reachable) : reachable;
}

}  // namespace

// --------------------------------------------------------------------------
// ValueTable / PolicyTable
// --------------------------------------------------------------------------

ValueTable::ValueTable(int horizon) : horizon_(horizon) {
    const auto n = static_cast<std::size_t>(horizon);
    cells_.assign((n + 1) * (n + 1), 0.0);
}

std::size_t ValueTable::offset(int k) const noexcept {
    const auto kk = static_cast<std::size_t>(k);
    return kk * (2 * static_cast<std::size_t>(horizon_) + 1) - kk * (kk - 1);
}

double ValueTable::value(int games_remaining, int score) const {
    if (games_remaining < 0 || games_remaining > horizon_)
        throw std::out_of_range("stage outside [0, horizon]");
    if (std::abs(score) > games_remaining) return sign(score);
    if (std::abs(score) > radius(games_remaining))
        throw std::out_of_range("score not reachable at this stage");
    return at(games_remaining, score);
}

PolicyTable::PolicyTable(int horizon) : horizon_(horizon) {
    stage_offset_.assign(static_cast<std::size_t>(horizon) + 2, 0);
    for (int k = 1; k <= horizon; ++k)
        stage_offset_[k + 1] = stage_offset_[k] + 2 * static_cast<std::size_t>(std::min(k, horizon - k)) + 1;
    actions_.assign(stage_offset_.back(), Action::Defense);
}

std::size_t PolicyTable::index(int k, int score) const noexcept {
    return stage_offset_[k] + static_cast<std::size_t>(score + std::min(k, horizon_ - k));
}

Action PolicyTable::action(int games_remaining, int score) const noexcept {
    if (games_remaining < 1 || games_remaining > horizon_) return Action::Defense;
    if (std::abs(score) > std::min(games_remaining, horizon_ - games_remaining)) return Action::Defense;
    return actions_[index(games_remaining, score)];
}

void PolicyTable::set(int games_remaining, int score, Action a) noexcept {
    actions_[index(games_remaining, score)] = a;
}

// --------------------------------------------------------------------------
// Solvers
// --------------------------------------------------------------------------

Solution solve(const MatchSpec& spec, int horizon, const SolverOptions& options) {
    check_horizon(horizon, options.max_full_stages, "full-table");
    const bool prune = options.prune_forced;

    Solution sol;
    sol.values = ValueTable(horizon);
    sol.policy = PolicyTable(horizon);
    auto& V = sol.values;

    for (int x = -horizon; x <= horizon; ++x) V.at(0, x) = sign(x);

    for (int k = 1; k <= horizon; ++k) {
        const int reach = horizon - k;
        const int live = live_radius(k, horizon, prune);
        auto prev = [&](int x) {
            if (prune && std::abs(x) > k - 1) return static_cast<double>(sign(x));
            return V.at(k - 1, x);
        };
        for (int x = -reach; x <= reach; ++x) {
            if (std::abs(x) > live) {
                V.at(k, x) = sign(x);
                continue;
            }
            const Choice c = bellman(spec, prev(x - 1), prev(x), prev(x + 1));
            ++sol.evaluations;
            V.at(k, x) = c.value;
            if (std::abs(x) <= std::min(k, reach)) sol.policy.set(k, x, c.action);
        }
    }
    sol.gain = V.at(horizon, 0);
    return sol;
}

std::vector<double> optimal_gains(const MatchSpec& spec, int n_max, const SolverOptions& options,
                                  std::int64_t& evaluations) {
    check_horizon(n_max, options.max_value_only_stages, "value-only");
    const bool prune = options.prune_forced;
    const std::size_t width = 2 * static_cast<std::size_t>(n_max) + 1;
    const int origin = n_max;
    std::vector<double> prev_row(width), row(width);
    for (int x = -n_max; x <= n_max; ++x) prev_row[origin + x] = sign(x);

    std::vector<double> gains;
    gains.reserve(static_cast<std::size_t>(n_max));
    evaluations = 0;
    for (int k = 1; k <= n_max; ++k) {
        const int live = live_radius(k, n_max, prune);
        auto prev = [&](int x) {
            if (prune && std::abs(x) > k - 1) return static_cast<double>(sign(x));
            return prev_row[origin + x];
        };
        for (int x = -live; x <= live; ++x) {
            row[origin + x] = bellman(spec, prev(x - 1), prev(x), prev(x + 1)).value;
        }
        evaluations += 2 * static_cast<std::int64_t>(live) + 1;
        gains.push_back(row[origin]);
        prev_row.swap(row);
    }
    return gains;
}

std::vector<double> optimal_gains(const MatchSpec& spec, int n_max, const SolverOptions& options) {
    std::int64_t evaluations = 0;
    return optimal_gains(spec, n_max, options, evaluations);
}

HorizonOptimum find_optimal_horizon(const MatchSpec& spec, int n_max, const SolverOptions& options) {
    const auto gains = optimal_gains(spec, n_max, options);
    HorizonOptimum best{1, gains.front()};
    for (int n = 2; n <= n_max; ++n) {
        if (gains[n - 1] > best.gain) best = {n, gains[n - 1]};
    }
    return best;
}

}  // namespace matchplay::dp
