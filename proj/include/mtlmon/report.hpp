#pragma once

#include <iosfwd>
#include <string>

#include "mtlmon/monitor.hpp"

namespace mtlmon {

/// Human-readable run report: one line per requirement plus a summary.
void render_text(std::ostream& out, const RunReport& report);

/// Machine-readable report with the stable schema
///   requirements: [{name, class, verdict, violation_time|null, events}],
///   summary: {violated, total, events_per_second}.
std::string render_json(const RunReport& report);

}  // namespace mtlmon
