#pragma once

#include <string>

#include "matchplay/dp.hpp"

namespace matchplay::report {

/// 17 significant digits, '.' separator, negative zero printed as "0".
std::string format_number(double v);

/// Header "N,<column>,..." then one LF-terminated row per horizon.
std::string curve_csv(const dp::GainCurve& curve);

/// Array of objects keyed exactly like the CSV header.
std::string curve_json(const dp::GainCurve& curve);

}  // namespace matchplay::report
