#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace matchplay {

/// Absolute tolerance used for every probability equality test.
inline constexpr double kProbTolerance = 1e-12;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidProbability : public Error {
public:
    using Error::Error;
};

/// Raised when the defensive style draws less often than the offensive one.
class DefensiveConventionViolated : public Error {
public:
    using Error::Error;
};

class InvalidHorizon : public Error {
public:
    using Error::Error;
};

/// The requested horizon exceeds the configured memory/time budget.
class HorizonTooLarge : public Error {
public:
    using Error::Error;
};

class OracleHorizonTooLarge : public HorizonTooLarge {
public:
    using HorizonTooLarge::HorizonTooLarge;
};

class RegimeNotCovered : public Error {
public:
    using Error::Error;
};

class InvalidSampleCount : public Error {
public:
    using Error::Error;
};

// ---------------------------------------------------------------------------
// Styles and outcome distributions
// ---------------------------------------------------------------------------

enum class Action : std::uint8_t { Offense, Defense };

const char* to_string(Action a) noexcept;

/// (win, draw, loss) probabilities of one round under a fixed style.
class StyleDistribution {
public:
    /// Throws InvalidProbability unless every entry is in [0,1] and the
    /// entries sum to one within kProbTolerance.
    StyleDistribution(double win, double draw, double loss);

    double win() const noexcept { return win_; }
    double draw() const noexcept { return draw_; }
    double loss() const noexcept { return loss_; }

    /// Expected one-round score change, win - loss.
    double drift() const noexcept { return win_ - loss_; }

    /// Same style with win and loss exchanged.
    StyleDistribution mirrored() const noexcept;

    friend bool operator==(const StyleDistribution&, const StyleDistribution&) = default;

private:
    struct Unchecked {};
    StyleDistribution(double win, double draw, double loss, Unchecked) noexcept
        : win_(win), draw_(draw), loss_(loss) {}

    double win_;
    double draw_;
    double loss_;
};

StyleDistribution make_distribution(double win, double draw, double loss);

/// Stochastic order: a dominates b when a wins at least as often and loses
/// at most as often (both within kProbTolerance).
bool dominates(const StyleDistribution& a, const StyleDistribution& b) noexcept;

struct Classification {
    bool weak = false;
    bool strictly_weak = false;
    bool safe_defense = false;
    bool fair_defense = false;
    bool fair_non_safe = false;
    bool defense_dominates_offense = false;
    bool offense_dominates_defense = false;

    friend bool operator==(const Classification&, const Classification&) = default;
};

/// Offense (p) and defense (q) styles of the adaptive player. The defense
/// must draw at least as often as the offense.
class MatchSpec {
public:
    MatchSpec(StyleDistribution offense, StyleDistribution defense);

    const StyleDistribution& offense() const noexcept { return offense_; }
    const StyleDistribution& defense() const noexcept { return defense_; }
    const StyleDistribution& style(Action a) const noexcept {
        return a == Action::Offense ? offense_ : defense_;
    }
    const Classification& classification() const noexcept { return classification_; }

private:
    StyleDistribution offense_;
    StyleDistribution defense_;
    Classification classification_;
};

Classification classify(const MatchSpec& spec) noexcept;

/// Convenience: MatchSpec from six raw probabilities.
MatchSpec make_spec(double pw, double pd, double pl, double qw, double qd, double ql);

/// Round index and score (wins minus losses) of a match in progress.
class MatchState {
public:
    MatchState(int round, int score);

    int round() const noexcept { return round_; }
    int score() const noexcept { return score_; }

private:
    int round_;
    int score_;
};

constexpr int sign(int x) noexcept { return (x > 0) - (x < 0); }

std::string describe(const StyleDistribution& s);

}  // namespace matchplay
