#include "matchplay/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "matchplay/analytic.hpp"
#include "matchplay/dp.hpp"
#include "matchplay/oracle.hpp"
#include "matchplay/policies.hpp"

namespace matchplay::verify {

namespace {

std::string fmt(const char* pattern, double a) {
    char buf[160];
    std::snprintf(buf, sizeof buf, pattern, a);
    return buf;
}

std::string spec_label(const MatchSpec& s) {
    return "p=" + describe(s.offense()) + " q=" + describe(s.defense());
}

// Tracks the worst violation seen so far for a family of inequalities.
struct Worst {
    double excess = -INFINITY;
    std::string where;

    void record(double e, const std::string& w) {
        if (e > excess) {
            excess = e;
            where = w;
        }
    }
};

CheckResult finish(std::string name, int cases, const Worst& worst, double tolerance) {
    CheckResult r;
    r.name = std::move(name);
    r.cases = cases;
    r.passed = worst.excess <= tolerance;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", worst.excess);
    r.detail = std::string("max_excess:") + buf + " cases:" + std::to_string(cases);
    if (!r.passed) r.detail += " at " + worst.where;
    return r;
}

}  // namespace

GainSolver default_solver() {
    return [](const MatchSpec& spec, int n_max) { return dp::optimal_gains(spec, n_max); };
}

std::string format(const CheckResult& r) {
    return r.name + "=" + r.detail + (r.passed ? " PASS" : " FAIL");
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

// --------------------------------------------------------------------------
// SpecSampler
// --------------------------------------------------------------------------

int SpecSampler::uniform(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(rng_() % span);
}

StyleDistribution SpecSampler::from_units(int w, int d, int l) const {
    const double u = kUnits;
    return StyleDistribution(w / u, d / u, l / u);
}

StyleDistribution SpecSampler::style() {
    const int a = uniform(0, kUnits);
    const int b = uniform(0, kUnits);
    const int lo = std::min(a, b), hi = std::max(a, b);
    return from_units(lo, hi - lo, kUnits - hi);
}

StyleDistribution SpecSampler::offense_with_draw_at_most(int max_draw_units) {
    const int d = uniform(0, max_draw_units);
    const int w = uniform(0, kUnits - d);
    return from_units(w, d, kUnits - d - w);
}

MatchSpec SpecSampler::weak_spec() {
    for (;;) {
        const auto p = style();
        const auto q = style();
        if (p.win() > p.loss() || q.win() > q.loss() || q.draw() < p.draw()) continue;
        return MatchSpec(p, q);
    }
}

SpecSampler::DominancePair SpecSampler::dominance_pair() {
    const auto q = style();
    const int qw = static_cast<int>(std::lround(q.win() * kUnits));
    const int ql = static_cast<int>(std::lround(q.loss() * kUnits));
    const int qd = kUnits - qw - ql;
    const int bw = uniform(qw, kUnits);
    const int bl = uniform(0, std::min(ql, kUnits - bw));
    const int bd = kUnits - bw - bl;
    const auto better = from_units(bw, bd, bl);
    const auto p = offense_with_draw_at_most(std::min(qd, bd));
    return {MatchSpec(p, q), MatchSpec(p, better)};
}

MatchSpec SpecSampler::no_draw_weak_spec() {
    const int pw = uniform(0, kUnits / 2);
    const int qw = uniform(0, kUnits / 2);
    return MatchSpec(from_units(pw, 0, kUnits - pw), from_units(qw, 0, kUnits - qw));
}

MatchSpec SpecSampler::weak_spec_with_loss_above_offense_win() {
    for (;;) {
        auto s = weak_spec();
        if (s.defense().loss() >= s.offense().win()) return s;
    }
}

MatchSpec SpecSampler::fair_non_safe_spec(bool strict) {
    for (;;) {
        const int a = uniform(1, kUnits / 2);
        const auto q = from_units(a, kUnits - 2 * a, a);
        const int pd = uniform(0, kUnits - 2 * a);
        const int lo = strict ? a + 1 : 0;
        const int hi = (kUnits - pd) / 2;
        if (lo > hi) continue;
        const int pw = uniform(lo, hi);
        return MatchSpec(from_units(pw, pd, kUnits - pd - pw), q);
    }
}

MatchSpec SpecSampler::safe_defense_spec() {
    return MatchSpec(style(), from_units(0, kUnits, 0));
}

std::vector<MatchSpec> reference_grid() {
    return {
        make_spec(0.45, 0, 0.55, 0.10, 0.75, 0.15),
        make_spec(0.49, 0, 0.51, 0.02, 0.95, 0.03),
        make_spec(0.43, 0, 0.57, 0.06, 0.84, 0.10),
        make_spec(0.43, 0, 0.57, 0.06, 0.86, 0.08),
        make_spec(0.4, 0, 0.6, 0.15, 0.7, 0.15),
        make_spec(0.4, 0, 0.6, 0.1, 0.7, 0.2),
        make_spec(0.45, 0, 0.55, 0, 1, 0),
        make_spec(0.3, 0, 0.7, 0, 1, 0),
        make_spec(0.45, 0, 0.55, 0.1, 0.8, 0.1),
        make_spec(0.3, 0.2, 0.5, 0, 1, 0),
        make_spec(0.4, 0, 0.6, 0.05, 0.65, 0.30),
        make_spec(0.4, 0, 0.6, 0.05, 0.7, 0.25),
        make_spec(0.4, 0, 0.6, 0.4, 0, 0.6),
        make_spec(0.5, 0, 0.5, 0.2, 0.6, 0.2),
        make_spec(0.35, 0.1, 0.55, 0.1, 0.6, 0.3),
        make_spec(0.2, 0.3, 0.5, 0.05, 0.9, 0.05),
        make_spec(0.6, 0, 0.4, 0.1, 0.7, 0.2),
        make_spec(0.45, 0.1, 0.45, 0.3, 0.4, 0.3),
        make_spec(0.48, 0.02, 0.5, 0.01, 0.97, 0.02),
        make_spec(0.25, 0.25, 0.5, 0.25, 0.5, 0.25),
        make_spec(1, 0, 0, 0, 1, 0),
        make_spec(0, 0, 1, 0.1, 0.8, 0.1),
    };
}

// --------------------------------------------------------------------------
// Checks
// --------------------------------------------------------------------------

CheckResult check_chess_g2(const GainSolver& solver) {
    const auto spec = make_spec(0.45, 0, 0.55, 0.10, 0.75, 0.15);
    const double g2 = solver(spec, 2).at(1);
    CheckResult r;
    r.name = "g2_chess";
    r.cases = 1;
    r.passed = std::fabs(g2 - 0.08) <= kCheckTolerance;
    r.detail = fmt("%.12g", g2);
    return r;
}

CheckResult check_oracle_equivalence(const GainSolver& solver, const std::vector<MatchSpec>& specs,
                                     int max_horizon) {
    Worst worst;
    for (const auto& spec : specs) {
        const auto gains = solver(spec, max_horizon);
        const auto exact = policies::ExactSpec::from_spec(spec);
        for (int n = 1; n <= max_horizon; ++n) {
            const double oracle = policies::brute_force_optimal_exact(exact, n).gain;
            worst.record(std::fabs(gains[n - 1] - oracle), spec_label(spec) + " N=" + std::to_string(n));
        }
    }
    return finish("oracle_equivalence", static_cast<int>(specs.size()), worst, kCheckTolerance);
}

CheckResult check_dominance_monotonicity(const GainSolver& solver, int draws, std::uint64_t seed, int n_max) {
    SpecSampler sampler(seed);
    Worst worst;
    for (int i = 0; i < draws; ++i) {
        const auto pair = sampler.dominance_pair();
        const auto lo = solver(pair.base, n_max);
        const auto hi = solver(pair.better, n_max);
        for (int n = 1; n <= n_max; ++n)
            worst.record(lo[n - 1] - hi[n - 1], spec_label(pair.base) + " q'=" +
                                                      describe(pair.better.defense()) + " N=" + std::to_string(n));
    }
    return finish("dominance_monotonicity", draws, worst, kCheckTolerance);
}

CheckResult check_parity_no_draws(const GainSolver& solver, int draws, std::uint64_t seed, int half_max) {
    SpecSampler sampler(seed);
    Worst worst;
    for (int i = 0; i < draws; ++i) {
        const auto spec = sampler.no_draw_weak_spec();
        const auto g = solver(spec, 2 * half_max + 1);
        for (int n = 1; n <= half_max; ++n)
            worst.record(g[2 * n] - g[2 * n - 1], spec_label(spec) + " N=" + std::to_string(n));
    }
    return finish("parity_no_draws", draws, worst, kCheckTolerance);
}

CheckResult check_parity_counterexample(const GainSolver& solver, int half_max) {
    const auto spec = make_spec(0.4, 0, 0.6, 0.15, 0.7, 0.15);
    const auto g = solver(spec, 2 * half_max + 1);
    CheckResult r;
    r.name = "parity_counterexample";
    r.cases = 1;
    for (int n = 1; n <= half_max; ++n) {
        if (g[2 * n] > g[2 * n - 1]) {
            r.passed = true;
            char buf[128];
            std::snprintf(buf, sizeof buf, "N:%d g%d:%.6g g%d:%.6g", n, 2 * n + 1, g[2 * n], 2 * n, g[2 * n - 1]);
            r.detail = buf;
            return r;
        }
    }
    r.detail = "no_witness";
    return r;
}

CheckResult check_nonpositive_when_defense_loses_enough(const GainSolver& solver, int draws, std::uint64_t seed,
                                                        int n_max) {
    SpecSampler sampler(seed);
    Worst worst;
    for (int i = 0; i < draws; ++i) {
        const auto spec = sampler.weak_spec_with_loss_above_offense_win();
        const auto g = solver(spec, n_max);
        for (int n = 1; n <= n_max; ++n) worst.record(g[n - 1], spec_label(spec) + " N=" + std::to_string(n));
    }
    return finish("nonpositive_gain", draws, worst, kCheckTolerance);
}

CheckResult check_fair_defense_nonnegative(const GainSolver& solver, int draws, std::uint64_t seed, int n_max) {
    SpecSampler sampler(seed);
    Worst worst;
    for (int i = 0; i < draws; ++i) {
        const auto spec = sampler.fair_non_safe_spec(false);
        const auto g = solver(spec, n_max);
        for (int n = 1; n <= n_max; ++n) worst.record(-g[n - 1], spec_label(spec) + " N=" + std::to_string(n));
    }
    return finish("fair_defense_nonnegative", draws, worst, kCheckTolerance);
}

CheckResult check_fair_defense_strictly_positive(const GainSolver& solver, int draws, std::uint64_t seed,
                                                 int n_max) {
    SpecSampler sampler(seed);
    Worst worst;
    for (int i = 0; i < draws; ++i) {
        const auto spec = sampler.fair_non_safe_spec(true);
        const auto g = solver(spec, n_max);
        // excess > 0 exactly when some g_n is not strictly positive
        for (int n = 2; n <= n_max; ++n)
            worst.record(g[n - 1] > 0.0 ? -g[n - 1] : 1.0 - g[n - 1],
                         spec_label(spec) + " N=" + std::to_string(n));
    }
    return finish("fair_defense_positive", draws, worst, 0.0);
}

CheckResult check_safe_defense_monotone(const GainSolver& solver, int draws, std::uint64_t seed, int n_max) {
    SpecSampler sampler(seed);
    Worst worst;
    for (int i = 0; i < draws; ++i) {
        const auto spec = sampler.safe_defense_spec();
        const auto g = solver(spec, n_max);
        for (int n = 1; n < n_max; ++n) worst.record(g[n - 1] - g[n], spec_label(spec) + " N=" + std::to_string(n));
    }
    return finish("safe_defense_monotone", draws, worst, kCheckTolerance);
}

CheckResult check_cat_plus_identity(const GainSolver& solver, const std::vector<StyleDistribution>& offenses,
                                    int horizon) {
    Worst worst;
    const StyleDistribution safe(0, 1, 0);
    for (const auto& p : offenses) {
        const MatchSpec spec(p, safe);
        const auto g = solver(spec, horizon);
        const auto curves = policies::catenaccio_curves(spec, horizon);
        double envelope = 0.0;
        for (int n = 1; n <= horizon; ++n) {
            envelope = std::max(envelope, curves.cat_plus[n - 1]);
            worst.record(std::fabs(g[n - 1] - envelope), spec_label(spec) + " N=" + std::to_string(n));
        }
    }
    return finish("cat_plus_identity", static_cast<int>(offenses.size()), worst, kCheckTolerance);
}

CheckResult check_cat_plus_lower_bound(const GainSolver& solver, const std::vector<StyleDistribution>& offenses,
                                       int horizon) {
    Worst worst;
    const StyleDistribution safe(0, 1, 0);
    for (const auto& p : offenses) {
        const MatchSpec spec(p, safe);
        const auto g = solver(spec, horizon);
        const auto curves = policies::catenaccio_curves(spec, horizon);
        double envelope = 0.0;
        for (int n = 1; n <= horizon; ++n) {
            envelope = std::max(envelope, curves.cat_plus[n - 1]);
            worst.record(envelope - g[n - 1], spec_label(spec) + " N=" + std::to_string(n));
        }
    }
    return finish("cat_plus_lower_bound", static_cast<int>(offenses.size()), worst, kCheckTolerance);
}

CheckResult check_policy_bounds(const GainSolver& solver, const std::vector<MatchSpec>& specs, int n_max) {
    Worst worst;
    for (const auto& spec : specs) {
        const auto g = solver(spec, n_max);
        const auto curve = dp::gain_curve(spec, n_max,
                                          {dp::CurvePolicy::Catenaccio, dp::CurvePolicy::CatenaccioPlus,
                                           dp::CurvePolicy::Offense, dp::CurvePolicy::Defense});
        for (const auto& series : curve.series)
            for (int n = 1; n <= n_max; ++n)
                worst.record(series.gains[n - 1] - g[n - 1], spec_label(spec) + " " +
                                                                  dp::column_name(series.policy) +
                                                                  " N=" + std::to_string(n));
    }
    return finish("optimal_dominates_benchmarks", static_cast<int>(specs.size()), worst, kCheckTolerance);
}

CheckResult check_cat_plus_improves_cat(const std::vector<MatchSpec>& specs, int n_max) {
    Worst worst;
    for (const auto& spec : specs) {
        const auto curves = policies::catenaccio_curves(spec, n_max);
        for (int n = 1; n <= n_max; ++n)
            worst.record(curves.cat[n - 1] - curves.cat_plus[n - 1], spec_label(spec) + " N=" + std::to_string(n));
    }
    return finish("cat_plus_improves_cat", static_cast<int>(specs.size()), worst, kCheckTolerance);
}

std::vector<CheckResult> run_suite(const SuiteOptions& options) {
    const GainSolver solver = options.solver ? options.solver : default_solver();
    const auto grid = reference_grid();
    const int draws = options.draws;
    std::uint64_t seed = options.seed;

    std::vector<CheckResult> out;
    out.push_back(check_chess_g2(solver));
    out.push_back(check_oracle_equivalence(solver, grid, 4));
    out.push_back(check_dominance_monotonicity(solver, draws, seed++));
    out.push_back(check_parity_no_draws(solver, draws, seed++));
    out.push_back(check_parity_counterexample(solver));
    out.push_back(check_nonpositive_when_defense_loses_enough(solver, draws, seed++));
    out.push_back(check_fair_defense_nonnegative(solver, draws, seed++));
    out.push_back(check_fair_defense_strictly_positive(solver, draws, seed++));
    out.push_back(check_safe_defense_monotone(solver, draws, seed++));

    std::vector<StyleDistribution> offenses;
    for (const auto& s : grid)
        if (s.offense().win() < s.offense().loss()) offenses.push_back(s.offense());
    out.push_back(check_cat_plus_lower_bound(solver, offenses, 200));
    out.push_back(check_policy_bounds(solver, grid, 50));
    out.push_back(check_cat_plus_improves_cat(grid, 200));

    if (options.user_spec) {
        const auto& user = *options.user_spec;
        auto bounds = check_policy_bounds(solver, {user}, 50);
        bounds.name = "user_optimal_dominates_benchmarks";
        out.push_back(std::move(bounds));
        try {
            auto oracle = check_oracle_equivalence(solver, {user}, 4);
            oracle.name = "user_oracle_equivalence";
            out.push_back(std::move(oracle));
        } catch (const InvalidProbability&) {
            out.push_back({"user_oracle_equivalence", true, "skipped:not_six_digit_decimals", 0});
        }
        if (user.classification().safe_defense && user.offense().win() < user.offense().loss()) {
            auto id = check_cat_plus_lower_bound(solver, {user.offense()}, 200);
            id.name = "user_cat_plus_lower_bound";
            out.push_back(std::move(id));
        }
    }
    return out;
}

}  // namespace matchplay::verify
