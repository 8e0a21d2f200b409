#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "matchplay/core.hpp"

namespace matchplay::dp {

struct SolverOptions {
    /// Skip states whose result is already decided (|x| > games remaining)
    /// or that cannot be reached from the starting score.
    bool prune_forced = true;
    /// Stage limit when the full value and policy tables are kept.
    int max_full_stages = 20000;
    /// Stage limit for the rolling two-row mode used by gain curves.
    int max_value_only_stages = 100000;
};

/// Optimal values U_k(x) indexed by games remaining k and score x.
///
/// Stage k holds every score reachable from 0 with N - k games played,
/// |x| <= N - k. Scores with |x| > k are decided and read as sign(x).
class ValueTable {
public:
    ValueTable() = default;
    explicit ValueTable(int horizon);

    int horizon() const noexcept { return horizon_; }

    /// Throws std::out_of_range for stages outside [0, N] and for scores that
    /// are neither stored nor forced.
    double value(int games_remaining, int score) const;

    /// Largest |x| stored for stage k.
    int radius(int games_remaining) const noexcept { return horizon_ - games_remaining; }

    double& at(int games_remaining, int score) noexcept {
        return cells_[offset(games_remaining) + static_cast<std::size_t>(score + radius(games_remaining))];
    }
    double at(int games_remaining, int score) const noexcept {
        return cells_[offset(games_remaining) + static_cast<std::size_t>(score + radius(games_remaining))];
    }

    friend bool operator==(const ValueTable&, const ValueTable&) = default;

private:
    std::size_t offset(int k) const noexcept;

    int horizon_ = 0;
    std::vector<double> cells_;
};

/// Optimal action for each live state (1 <= k, |x| <= min(k, N - k)).
/// Every other state reports Defense.
class PolicyTable {
public:
    PolicyTable() = default;
    explicit PolicyTable(int horizon);

    int horizon() const noexcept { return horizon_; }
    Action action(int games_remaining, int score) const noexcept;
    void set(int games_remaining, int score, Action a) noexcept;

    friend bool operator==(const PolicyTable&, const PolicyTable&) = default;

private:
    std::size_t index(int k, int score) const noexcept;

    int horizon_ = 0;
    std::vector<std::size_t> stage_offset_;
    std::vector<Action> actions_;
};

struct Solution {
    ValueTable values;
    PolicyTable policy;
    double gain = 0.0;
    /// Number of Bellman backups performed.
    std::int64_t evaluations = 0;
};

/// Backward induction for one horizon. Bellman ties go to Defense.
Solution solve(const MatchSpec& spec, int horizon, const SolverOptions& options = {});

/// g*_n for n = 1..n_max (index n - 1) from a single backward pass with two
/// rolling rows; values depend only on games remaining.
std::vector<double> optimal_gains(const MatchSpec& spec, int n_max, const SolverOptions& options = {});

/// Same as optimal_gains, also reporting the number of backups.
std::vector<double> optimal_gains(const MatchSpec& spec, int n_max, const SolverOptions& options,
                                  std::int64_t& evaluations);

struct HorizonOptimum {
    int horizon;
    double gain;
};

/// Smallest N <= n_max that maximizes g*_N.
HorizonOptimum find_optimal_horizon(const MatchSpec& spec, int n_max, const SolverOptions& options = {});

// ---------------------------------------------------------------------------
// Gain curves
// ---------------------------------------------------------------------------

enum class CurvePolicy { Optimal, Catenaccio, CatenaccioPlus, Offense, Defense };

/// Column label used in CSV/JSON output.
const char* column_name(CurvePolicy p) noexcept;

struct GainSeries {
    CurvePolicy policy;
    std::vector<double> gains;  // gains[i] belongs to horizons[i]
};

struct GainCurve {
    std::vector<int> horizons;
    std::vector<GainSeries> series;

    const std::vector<double>& gains(CurvePolicy p) const;
};

inline const std::vector<CurvePolicy> kAllCurvePolicies = {
    CurvePolicy::Optimal, CurvePolicy::Catenaccio, CurvePolicy::CatenaccioPlus,
    CurvePolicy::Offense, CurvePolicy::Defense};

/// Gains for N = 1..n_max under each requested policy, in request order.
GainCurve gain_curve(const MatchSpec& spec, int n_max,
                     const std::vector<CurvePolicy>& policies = kAllCurvePolicies,
                     const SolverOptions& options = {});

}  // namespace matchplay::dp
