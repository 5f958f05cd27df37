#pragma once

#include <string>

#include "cli/report.hpp"

namespace estrada::cli {

/// Static SVG 1.1 convergence chart, two panels sharing the k axis:
/// bound columns against the exact Estrada index (top) and the ratio
/// sequence against the spectral radius (bottom).
///
/// Every series is a <polyline> with class "series <column>" and every
/// reference value a <line> with class "reference <name>". Coordinates are
/// printed with two decimals so output is byte-stable.
std::string render_svg(const Report& report);

}  // namespace estrada::cli
