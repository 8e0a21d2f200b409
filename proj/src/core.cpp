#include "matchplay/core.hpp"

#include <cassert>
#include <cmath>
#include <cstdio>

namespace matchplay {

const char* to_string(Action a) noexcept {
    return a == Action::Offense ? "Off" : "Def";
}

namespace {

bool approx_equal(double a, double b) noexcept {
    return std::fabs(a - b) <= kProbTolerance;
}

void check_probability(const char* name, double v) {
    if (!std::isfinite(v) || v < 0.0 || v > 1.0) {
        char buf[128];
        std::snprintf(buf, sizeof buf, "%s probability %.17g is not in [0,1]", name, v);
        throw InvalidProbability(buf);
    }
}

}  // namespace

StyleDistribution::StyleDistribution(double win, double draw, double loss)
    : win_(win), draw_(draw), loss_(loss) {
    check_probability("win", win);
    check_probability("draw", draw);
    check_probability("loss", loss);
    const double total = win + draw + loss;
    if (std::fabs(total - 1.0) > kProbTolerance) {
        char buf[128];
        std::snprintf(buf, sizeof buf, "win+draw+loss = %.17g, expected 1", total);
        throw InvalidProbability(buf);
    }
}

StyleDistribution StyleDistribution::mirrored() const noexcept {
    return StyleDistribution(loss_, draw_, win_, Unchecked{});
}

StyleDistribution make_distribution(double win, double draw, double loss) {
    return StyleDistribution(win, draw, loss);
}

bool dominates(const StyleDistribution& a, const StyleDistribution& b) noexcept {
    return a.win() >= b.win() - kProbTolerance && a.loss() <= b.loss() + kProbTolerance;
}

Classification classify(const MatchSpec& spec) noexcept {
    const auto& p = spec.offense();
    const auto& q = spec.defense();
    Classification c;
    c.weak = p.win() <= p.loss() + kProbTolerance && q.win() <= q.loss() + kProbTolerance;
    c.strictly_weak = p.win() < p.loss() - kProbTolerance && q.win() < q.loss() - kProbTolerance;
    c.safe_defense = approx_equal(q.draw(), 1.0);
    c.fair_defense = approx_equal(q.win(), q.loss());
    c.fair_non_safe = c.fair_defense && !c.safe_defense;
    c.defense_dominates_offense = dominates(q, p);
    c.offense_dominates_defense = dominates(p, q);
    // Weakness plus q_d >= p_d forces q_w <= p_l.
    assert(!c.weak || q.win() <= p.loss() + 4 * kProbTolerance);
    return c;
}

MatchSpec::MatchSpec(StyleDistribution offense, StyleDistribution defense)
    : offense_(offense), defense_(defense) {
    if (defense_.draw() < offense_.draw() - kProbTolerance) {
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "defense draw probability %.17g is below offense draw probability %.17g",
                      defense_.draw(), offense_.draw());
        throw DefensiveConventionViolated(buf);
    }
    classification_ = classify(*this);
}

MatchSpec make_spec(double pw, double pd, double pl, double qw, double qd, double ql) {
    return MatchSpec(StyleDistribution(pw, pd, pl), StyleDistribution(qw, qd, ql));
}

MatchState::MatchState(int round, int score) : round_(round), score_(score) {
    if (round < 0) throw InvalidHorizon("round must be non-negative");
    if (score > round || score < -round) throw std::out_of_range("|score| exceeds round");
}

std::string describe(const StyleDistribution& s) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "(%.6g, %.6g, %.6g)", s.win(), s.draw(), s.loss());
    return buf;
}

}  // namespace matchplay
