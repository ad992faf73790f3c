#pragma once

#include <string>

#include "geoconn/pipeline.hpp"

namespace geoconn {

/// JSON form of a report (keys: components, connected_geom, dim_r, ell,
/// stab_n, hsop, chain, strategy, certified, timings_ms). Deterministic
/// except for the timing values.
std::string report_to_json(const RunReport& report);

/// Human-readable multi-line form.
std::string report_to_text(const RunReport& report);

} // namespace geoconn
