#include "matchplay/oracle.hpp"

#include <cmath>
#include <cstdlib>
#include <vector>

namespace matchplay::policies {

namespace {

ExactStyle make_exact(std::int64_t w, std::int64_t d, std::int64_t l) {
    if (w + d + l != kOracleScale) throw InvalidProbability("exact probabilities do not sum to 1");
    return {w, d, l};
}

std::int64_t to_scaled(double v) {
    const double scaled = std::round(v * static_cast<double>(kOracleScale));
    if (std::fabs(scaled / static_cast<double>(kOracleScale) - v) > kProbTolerance)
        throw InvalidProbability("value is not a decimal with at most 6 fractional digits");
    return static_cast<std::int64_t>(scaled);
}

Int128 gcd(Int128 a, Int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        const Int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

struct Lattice {
    int horizon;
    // state_index[n][x + n] = bit position, or -1 for decided states.
    std::vector<std::vector<int>> state_index;
    int count = 0;
};

Lattice build_lattice(int horizon) {
    Lattice lat{horizon, {}, 0};
    lat.state_index.resize(static_cast<std::size_t>(horizon));
    for (int n = 0; n < horizon; ++n) {
        auto& row = lat.state_index[n];
        row.assign(2 * static_cast<std::size_t>(n) + 1, -1);
        for (int x = -n; x <= n; ++x) {
            if (std::abs(x) <= horizon - n) row[x + n] = lat.count++;
        }
    }
    return lat;
}

// Sum over every outcome path from (round, score) of sign(X_N) times the
// product of scaled probabilities along the path.
Int128 tree_value(const ExactSpec& spec, const Lattice& lat, std::uint64_t mask, int round, int score) {
    if (round == lat.horizon) return sign(score);
    const int bit = lat.state_index[round][score + round];
    const bool off = bit >= 0 && ((mask >> bit) & 1U);
    const ExactStyle& s = spec.style(off ? Action::Offense : Action::Defense);
    Int128 total = 0;
    if (s.win != 0) total += Int128(s.win) * tree_value(spec, lat, mask, round + 1, score + 1);
    if (s.draw != 0) total += Int128(s.draw) * tree_value(spec, lat, mask, round + 1, score);
    if (s.loss != 0) total += Int128(s.loss) * tree_value(spec, lat, mask, round + 1, score - 1);
    return total;
}

}  // namespace

std::int64_t parse_decimal_probability(std::string_view text) {
    const auto fail = [&]() -> std::int64_t {
        throw InvalidProbability("not a decimal probability with at most 6 fractional digits: '" +
                                 std::string(text) + "'");
    };
    if (text.empty()) return fail();
    std::size_t i = 0;
    std::int64_t whole = 0;
    bool digits = false;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        whole = whole * 10 + (text[i] - '0');
        if (whole > 1) return fail();
        digits = true;
        ++i;
    }
    std::int64_t frac = 0;
    int frac_digits = 0;
    if (i < text.size() && text[i] == '.') {
        ++i;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
            if (frac_digits == 6) {
                if (text[i] != '0') return fail();
            } else {
                frac = frac * 10 + (text[i] - '0');
                ++frac_digits;
            }
            digits = true;
            ++i;
        }
    }
    if (!digits || i != text.size()) return fail();
    for (int d = frac_digits; d < 6; ++d) frac *= 10;
    const std::int64_t value = whole * kOracleScale + frac;
    if (value > kOracleScale) return fail();
    return value;
}

ExactSpec::ExactSpec(ExactStyle offense, ExactStyle defense) : offense_(offense), defense_(defense) {
    if (defense_.draw < offense_.draw)
        throw DefensiveConventionViolated("defense draw probability is below offense draw probability");
}

ExactSpec ExactSpec::parse(std::string_view pw, std::string_view pd, std::string_view pl,
                           std::string_view qw, std::string_view qd, std::string_view ql) {
    return ExactSpec(
        make_exact(parse_decimal_probability(pw), parse_decimal_probability(pd), parse_decimal_probability(pl)),
        make_exact(parse_decimal_probability(qw), parse_decimal_probability(qd), parse_decimal_probability(ql)));
}

ExactSpec ExactSpec::from_spec(const MatchSpec& spec) {
    const auto conv = [](const StyleDistribution& s) {
        return make_exact(to_scaled(s.win()), to_scaled(s.draw()), to_scaled(s.loss()));
    };
    return ExactSpec(conv(spec.offense()), conv(spec.defense()));
}

MatchSpec ExactSpec::to_spec() const {
    const auto conv = [](const ExactStyle& s) {
        const auto d = static_cast<double>(kOracleScale);
        return StyleDistribution(s.win / d, s.draw / d, s.loss / d);
    };
    return MatchSpec(conv(offense_), conv(defense_));
}

std::string to_string(Int128 v) {
    if (v == 0) return "0";
    const bool negative = v < 0;
    std::string digits;
    while (v != 0) {
        const int d = static_cast<int>(v % 10);
        digits.insert(digits.begin(), static_cast<char>('0' + (d < 0 ? -d : d)));
        v /= 10;
    }
    if (negative) digits.insert(digits.begin(), '-');
    return digits;
}

std::string OracleResult::fraction() const {
    const Int128 g = gcd(numerator, denominator);
    if (g == 0) return "0/1";
    return to_string(numerator / g) + "/" + to_string(denominator / g);
}

OracleResult brute_force_optimal_exact(const ExactSpec& spec, int horizon) {
    if (horizon < 1) throw InvalidHorizon("oracle horizon must be >= 1");
    if (horizon > kOracleMaxHorizon)
        throw OracleHorizonTooLarge("oracle horizon " + std::to_string(horizon) + " exceeds " +
                                    std::to_string(kOracleMaxHorizon));
    const Lattice lat = build_lattice(horizon);

    OracleResult best;
    best.live_states = lat.count;
    best.denominator = 1;
    for (int n = 0; n < horizon; ++n) best.denominator *= kOracleScale;

    const std::uint64_t policies = std::uint64_t{1} << lat.count;
    bool first = true;
    for (std::uint64_t mask = 0; mask < policies; ++mask) {
        const Int128 v = tree_value(spec, lat, mask, 0, 0);
        if (first || v > best.numerator) {
            best.numerator = v;
            best.policy_mask = mask;
            first = false;
        }
    }
    best.gain = static_cast<double>(best.numerator) / static_cast<double>(best.denominator);
    return best;
}

double brute_force_optimal(const MatchSpec& spec, int horizon) {
    return brute_force_optimal_exact(ExactSpec::from_spec(spec), horizon).gain;
}

}  // namespace matchplay::policies
