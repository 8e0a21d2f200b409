#include "matchplay/report.hpp"

#include <cstdio>

#include "json.hpp"

namespace matchplay::report {

std::string format_number(double v) {
    if (v == 0.0) v = 0.0;  // drops the sign of -0
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string curve_csv(const dp::GainCurve& curve) {
    std::string out = "N";
    for (const auto& s : curve.series) {
        out += ',';
        out += dp::column_name(s.policy);
    }
    out += '\n';
    for (std::size_t i = 0; i < curve.horizons.size(); ++i) {
        out += std::to_string(curve.horizons[i]);
        for (const auto& s : curve.series) {
            out += ',';
            out += format_number(s.gains[i]);
        }
        out += '\n';
    }
    return out;
}

std::string curve_json(const dp::GainCurve& curve) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < curve.horizons.size(); ++i) {
        nlohmann::ordered_json row;
        row["N"] = curve.horizons[i];
        for (const auto& s : curve.series) row[dp::column_name(s.policy)] = s.gains[i] == 0.0 ? 0.0 : s.gains[i];
        rows.push_back(std::move(row));
    }
    return rows.dump(2) + "\n";
}

}  // namespace matchplay::report
