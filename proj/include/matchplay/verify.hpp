#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "matchplay/core.hpp"

namespace matchplay::verify {

/// Returns g*_n for n = 1..n_max. The default is dp::optimal_gains; tests
/// swap in deliberately broken solvers to exercise failure reporting.
using GainSolver = std::function<std::vector<double>(const MatchSpec&, int n_max)>;

GainSolver default_solver();

/// Tolerance shared by every structural inequality check.
inline constexpr double kCheckTolerance = 1e-12;

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
    /// Number of parameter draws or specs examined.
    int cases = 0;
};

/// "name=detail PASS" / "name=detail FAIL".
std::string format(const CheckResult& r);

// ---------------------------------------------------------------------------
// Parameter generators. Probabilities are multiples of 1e-4 so every draw
// is also a valid input for the exact oracle.
// ---------------------------------------------------------------------------

class SpecSampler {
public:
    explicit SpecSampler(std::uint64_t seed) : rng_(seed) {}

    /// Uniform integer in [lo, hi].
    int uniform(int lo, int hi);

    StyleDistribution style();
    /// Weak player (both styles losing or fair) satisfying q_d >= p_d.
    MatchSpec weak_spec();
    /// Offense (p) with p_d <= max_draw.
    StyleDistribution offense_with_draw_at_most(int max_draw_units);

    struct DominancePair {
        MatchSpec base;     // (p, q)
        MatchSpec better;   // (p, q') with q' dominating q
    };
    DominancePair dominance_pair();

    MatchSpec no_draw_weak_spec();
    MatchSpec weak_spec_with_loss_above_offense_win();
    /// Weak, q_w = q_l > 0; when `strict`, also q_w < p_w.
    MatchSpec fair_non_safe_spec(bool strict);
    MatchSpec safe_defense_spec();

private:
    StyleDistribution from_units(int w, int d, int l) const;

    std::mt19937_64 rng_;
};

inline constexpr int kUnits = 10000;

/// Every parameter set quoted in the model's worked examples plus extra
/// coverage specs; at least 20 entries.
std::vector<MatchSpec> reference_grid();

// ---------------------------------------------------------------------------
// Checks
// ---------------------------------------------------------------------------

CheckResult check_chess_g2(const GainSolver& solver);
CheckResult check_oracle_equivalence(const GainSolver& solver, const std::vector<MatchSpec>& specs,
                                     int max_horizon = 4);
CheckResult check_dominance_monotonicity(const GainSolver& solver, int draws, std::uint64_t seed,
                                         int n_max = 100);
CheckResult check_parity_no_draws(const GainSolver& solver, int draws, std::uint64_t seed, int half_max = 50);
CheckResult check_parity_counterexample(const GainSolver& solver, int half_max = 50);
CheckResult check_nonpositive_when_defense_loses_enough(const GainSolver& solver, int draws, std::uint64_t seed,
                                                        int n_max = 100);
CheckResult check_fair_defense_nonnegative(const GainSolver& solver, int draws, std::uint64_t seed,
                                           int n_max = 100);
CheckResult check_fair_defense_strictly_positive(const GainSolver& solver, int draws, std::uint64_t seed,
                                                 int n_max = 100);
CheckResult check_safe_defense_monotone(const GainSolver& solver, int draws, std::uint64_t seed,
                                        int n_max = 100);
CheckResult check_cat_plus_identity(const GainSolver& solver, const std::vector<StyleDistribution>& offenses,
                                    int horizon);
/// g*_n >= 0 v max_{m<=n} g^{cat+}_m with a safe defense (the half of the
/// identity that holds for every offense).
CheckResult check_cat_plus_lower_bound(const GainSolver& solver, const std::vector<StyleDistribution>& offenses,
                                       int horizon);
CheckResult check_policy_bounds(const GainSolver& solver, const std::vector<MatchSpec>& specs, int n_max);
CheckResult check_cat_plus_improves_cat(const std::vector<MatchSpec>& specs, int n_max);

struct SuiteOptions {
    int draws = 100;
    std::uint64_t seed = 0x5eed2026ULL;
    std::optional<MatchSpec> user_spec;
    GainSolver solver;  // empty selects default_solver()
};

std::vector<CheckResult> run_suite(const SuiteOptions& options);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace matchplay::verify
