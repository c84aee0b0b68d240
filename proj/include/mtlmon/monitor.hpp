#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mtlmon/formula.hpp"
#include "mtlmon/oracle.hpp"
#include "mtlmon/speclang.hpp"
#include "mtlmon/trace.hpp"

namespace mtlmon {

/// Three-valued verdict domain. Violated and (conclusive) NotViolated are
/// terminal: a monitor latches them and never leaves.
enum class Verdict { NotViolated, Violated, NotEvaluated };

std::string_view to_string(Verdict v);

/// One requirement's residual formula plus the latched verdict.
///
/// Derivation of event i needs the successor timestamp, so the monitor runs
/// with one-event lookahead: feed() buffers the new event and derives the
/// previously buffered one. finish() closes the trace, deriving the buffered
/// final event under end-of-trace semantics; afterwards the verdict is
/// always conclusive.
///
/// Single-owner mutable state: serialize feed/finish per monitor. Distinct
/// monitors share nothing.
class Monitor {
 public:
  Monitor(Requirement requirement, AtomValuation valuation);

  /// Returns the post-update status. Throws MonotonicityError on a
  /// decreasing timestamp and propagates unbound-proposition errors.
  Verdict feed(std::shared_ptr<const TimedState> event);
  Verdict feed(const TimedState& event);

  /// Closes the trace. Requires at least one fed event (EmptyTraceError
  /// otherwise); idempotent once called.
  Verdict finish();

  Verdict status() const { return status_; }
  std::optional<double> violation_time() const { return violation_time_; }
  std::size_t events_consumed() const { return events_; }
  std::size_t max_residual_nodes() const { return max_residual_nodes_; }
  const Formula& residual() const { return residual_; }
  const Requirement& requirement() const { return requirement_; }

 private:
  void consume_pending(std::optional<double> tau_next);
  bool terminal() const { return status_ != Verdict::NotEvaluated; }

  Requirement requirement_;
  AtomValuation valuation_;
  Formula residual_;
  Verdict status_ = Verdict::NotEvaluated;
  std::optional<double> violation_time_;
  std::size_t events_ = 0;
  std::size_t max_residual_nodes_ = 0;
  std::shared_ptr<const TimedState> pending_;
  std::optional<double> last_tau_;
  bool finished_ = false;
};

struct RequirementResult {
  std::string name;
  RequirementClass cls = RequirementClass::General;
  Verdict verdict = Verdict::NotEvaluated;
  std::optional<double> violation_time;
  std::size_t events = 0;
};

struct RunReport {
  std::vector<RequirementResult> requirements;
  std::size_t violated_count = 0;
  std::size_t total_events = 0;
  double wall_seconds = 0.0;
  double events_per_second = 0.0;
  std::size_t max_residual_nodes = 0;
};

struct RunOptions {
  /// Hard cap on any monitor's residual size; exceeding it raises
  /// ResidualCeilingError (guards against pathological normal-form blow-up).
  std::size_t residual_ceiling = 10000;
};

/// Feeds every event to every requirement's monitor in trace order, then
/// finishes all monitors. Monitors are independent; errors are annotated
/// with the requirement name and event index.
RunReport run_all(const RequirementSet& requirements, TraceReader& reader,
                  const RunOptions& options = {});
RunReport run_all(const RequirementSet& requirements,
                  const TimedStateSequence& trace,
                  const RunOptions& options = {});

}  // namespace mtlmon
