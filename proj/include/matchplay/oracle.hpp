#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "matchplay/core.hpp"

namespace matchplay::policies {

/// Probabilities are held as integer numerators over this denominator, so
/// every oracle input must be a decimal with at most six fractional digits.
inline constexpr std::int64_t kOracleScale = 1'000'000;
inline constexpr int kOracleMaxHorizon = 5;

using Int128 = __int128;

struct ExactStyle {
    std::int64_t win;
    std::int64_t draw;
    std::int64_t loss;
};

class ExactSpec {
public:
    /// Parses six decimal strings such as "0.45" or "1".
    static ExactSpec parse(std::string_view pw, std::string_view pd, std::string_view pl,
                           std::string_view qw, std::string_view qd, std::string_view ql);

    /// Recovers the six-digit decimals behind a floating-point spec. Throws
    /// InvalidProbability if a value is not such a decimal.
    static ExactSpec from_spec(const MatchSpec& spec);

    const ExactStyle& offense() const noexcept { return offense_; }
    const ExactStyle& defense() const noexcept { return defense_; }
    const ExactStyle& style(Action a) const noexcept { return a == Action::Offense ? offense_ : defense_; }

    MatchSpec to_spec() const;

private:
    ExactSpec(ExactStyle offense, ExactStyle defense);

    ExactStyle offense_;
    ExactStyle defense_;
};

/// Parses a decimal probability into a numerator over kOracleScale.
std::int64_t parse_decimal_probability(std::string_view text);

struct OracleResult {
    Int128 numerator = 0;
    Int128 denominator = 1;
    double gain = 0.0;
    /// Deterministic Markov policy attaining the optimum, as a bit mask over
    /// the live decision states in (round, score) order; bit set = Offense.
    std::uint64_t policy_mask = 0;
    int live_states = 0;

    /// Reduced fraction, e.g. "2/25".
    std::string fraction() const;
};

/// Optimal gain by enumerating every deterministic Markov policy on the live
/// lattice and taking the full outcome-tree expectation of each in exact
/// integer arithmetic. Horizon must be in [1, 5].
OracleResult brute_force_optimal_exact(const ExactSpec& spec, int horizon);

double brute_force_optimal(const MatchSpec& spec, int horizon);

std::string to_string(Int128 v);

}  // namespace matchplay::policies
