#pragma once

#include <string>
#include <vector>

#include "mtlmon/trace.hpp"

namespace mtlmon {

/// A violation the fixture documentation promises for one trace.
struct ExpectedViolation {
  std::string requirement;
  double violation_time = 0.0;
};

struct FixtureTrace {
  std::string name;  // file stem, e.g. "stuck_offgas_valve"
  std::string description;
  TimedStateSequence trace;
  std::vector<ExpectedViolation> expected_violations;
};

/// The bundled synthetic case study: a 26-requirement autoclave
/// specification (20 limit, 5 timed-order, 1 delayed-order), one clean
/// trace and four fault-injection traces with hand-derived expected
/// verdicts. Variables follow simple stepwise profiles so every expected
/// violation time can be checked by hand and by the oracle.
struct FixtureBundle {
  std::string spec_text;
  std::vector<FixtureTrace> traces;
};

FixtureBundle make_fixture_bundle();

/// Violation-free trace of the fixture schema at 1 s steps, sized for
/// throughput runs. Trigger episodes repeat every 600 s and a quiet tail
/// lets all obligations resolve; needs at least 801 events so the
/// delayed-order requirement sees one handled episode.
TimedStateSequence make_clean_trace(std::size_t events);

/// Writes spec, traces/, expected_verdicts.json and a short README into
/// directory (created if missing).
void write_fixture_bundle(const std::string& directory);

}  // namespace mtlmon
