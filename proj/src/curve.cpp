#include <optional>
#include <stdexcept>

#include "matchplay/analytic.hpp"
#include "matchplay/dp.hpp"
#include "matchplay/policies.hpp"

namespace matchplay::dp {

const char* column_name(CurvePolicy p) noexcept {
    switch (p) {
        case CurvePolicy::Optimal: return "gain_opt";
        case CurvePolicy::Catenaccio: return "gain_cat";
        case CurvePolicy::CatenaccioPlus: return "gain_catplus";
        case CurvePolicy::Offense: return "gain_off";
        case CurvePolicy::Defense: return "gain_def";
    }
    return "?";
}

const std::vector<double>& GainCurve::gains(CurvePolicy p) const {
    for (const auto& s : series)
        if (s.policy == p) return s.gains;
    throw std::out_of_range(std::string("curve has no series ") + column_name(p));
}

GainCurve gain_curve(const MatchSpec& spec, int n_max, const std::vector<CurvePolicy>& requested,
                     const SolverOptions& options) {
    GainCurve curve;
    // Validates the horizon and budget before any other work.
    std::vector<double> optimal = optimal_gains(spec, n_max, options);

    curve.horizons.reserve(static_cast<std::size_t>(n_max));
    for (int n = 1; n <= n_max; ++n) curve.horizons.push_back(n);

    std::optional<policies::CatenaccioCurves> cat;
    for (const CurvePolicy p : requested) {
        GainSeries s{p, {}};
        switch (p) {
            case CurvePolicy::Optimal:
                s.gains = optimal;
                break;
            case CurvePolicy::Catenaccio:
            case CurvePolicy::CatenaccioPlus:
                if (!cat) cat = policies::catenaccio_curves(spec, n_max);
                s.gains = p == CurvePolicy::Catenaccio ? cat->cat : cat->cat_plus;
                break;
            case CurvePolicy::Offense:
                s.gains = analytic::fixed_style_gain_curve(spec.offense(), n_max);
                break;
            case CurvePolicy::Defense:
                s.gains = analytic::fixed_style_gain_curve(spec.defense(), n_max);
                break;
        }
        curve.series.push_back(std::move(s));
    }
    return curve;
}

}  // namespace matchplay::dp
