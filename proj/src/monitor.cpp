#include "mtlmon/monitor.hpp"

#include <chrono>

#include "mtlmon/canonical.hpp"
#include "mtlmon/errors.hpp"
#include "mtlmon/progression.hpp"

namespace mtlmon {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::NotViolated:
      return "not_violated";
    case Verdict::Violated:
      return "violated";
    case Verdict::NotEvaluated:
      return "not_evaluated";
  }
  return "not_evaluated";
}

Monitor::Monitor(Requirement requirement, AtomValuation valuation)
    : requirement_(std::move(requirement)),
      valuation_(std::move(valuation)),
      residual_(canonicalize(requirement_.formula)) {
  max_residual_nodes_ = residual_.node_count();
  // A spec that is already a constant gets its verdict before any event;
  // the absent violation_time marks spec-level falsity rather than a
  // trace-level violation.
  if (residual_.is_false()) {
    status_ = Verdict::Violated;
  } else if (residual_.is_true()) {
    status_ = Verdict::NotViolated;
  }
}

void Monitor::consume_pending(std::optional<double> tau_next) {
  StepContext ctx;
  const TimedState& state = *pending_;
  ctx.atom_truth = [this, &state](const std::string& atom) {
    return valuation_(atom, state);
  };
  ctx.tau = state.tau;
  ctx.tau_next = tau_next;
  residual_ = tau_next ? derive_step(residual_, ctx)
                       : derive_final(residual_, ctx);
  if (residual_.node_count() > max_residual_nodes_) {
    max_residual_nodes_ = residual_.node_count();
  }
  if (residual_.is_false()) {
    status_ = Verdict::Violated;
    violation_time_ = state.tau;
  } else if (residual_.is_true()) {
    status_ = Verdict::NotViolated;
  }
}

Verdict Monitor::feed(std::shared_ptr<const TimedState> event) {
  if (finished_) {
    throw Error("feed after finish on monitor '" + requirement_.name + "'");
  }
  if (last_tau_ && event->tau < *last_tau_) {
    throw MonotonicityError(
        "decreasing timestamp fed to monitor '" + requirement_.name + "': " +
        format_number(event->tau) + " after " + format_number(*last_tau_));
  }
  last_tau_ = event->tau;
  ++events_;
  if (terminal()) return status_;  // latched: absorb without rewriting
  if (pending_) consume_pending(event->tau);
  pending_ = terminal() ? nullptr : std::move(event);
  return status_;
}

Verdict Monitor::feed(const TimedState& event) {
  return feed(std::make_shared<const TimedState>(event));
}

Verdict Monitor::finish() {
  if (finished_) return status_;
  if (events_ == 0) {
    throw EmptyTraceError("finish on monitor '" + requirement_.name +
                          "' with zero events fed");
  }
  finished_ = true;
  if (terminal()) return status_;
  consume_pending(std::nullopt);
  pending_ = nullptr;
  return status_;
}

namespace {

template <typename Source>
RunReport run_loop(const RequirementSet& requirements, Source&& source,
                   const RunOptions& options) {
  std::vector<Monitor> monitors;
  monitors.reserve(requirements.requirements().size());
  AtomValuation valuation = requirements.valuation();
  for (const Requirement& req : requirements.requirements()) {
    monitors.emplace_back(req, valuation);
  }

  auto annotate = [](const Error& e, const std::string& req,
                     std::size_t event_index) {
    return RunError("requirement '" + req + "', event " +
                    std::to_string(event_index) + ": " + e.what());
  };

  const auto start = std::chrono::steady_clock::now();
  std::size_t event_index = 0;
  while (std::optional<TimedState> event = source()) {
    ++event_index;
    auto shared = std::make_shared<const TimedState>(std::move(*event));
    for (Monitor& m : monitors) {
      try {
        m.feed(shared);
      } catch (const Error& e) {
        throw annotate(e, m.requirement().name, event_index);
      }
      if (m.max_residual_nodes() > options.residual_ceiling) {
        throw ResidualCeilingError(
            "requirement '" + m.requirement().name + "', event " +
            std::to_string(event_index) + ": residual grew to " +
            std::to_string(m.max_residual_nodes()) + " nodes (ceiling " +
            std::to_string(options.residual_ceiling) + ")");
      }
    }
  }
  if (event_index == 0) {
    throw EmptyTraceError("trace input contains no events");
  }
  for (Monitor& m : monitors) {
    try {
      m.finish();
    } catch (const Error& e) {
      throw annotate(e, m.requirement().name, event_index);
    }
  }
  const auto end = std::chrono::steady_clock::now();

  RunReport report;
  report.total_events = event_index;
  report.wall_seconds = std::chrono::duration<double>(end - start).count();
  report.events_per_second =
      static_cast<double>(event_index) /
      (report.wall_seconds > 1e-9 ? report.wall_seconds : 1e-9);
  for (const Monitor& m : monitors) {
    RequirementResult r;
    r.name = m.requirement().name;
    r.cls = m.requirement().cls;
    r.verdict = m.status();
    r.violation_time = m.violation_time();
    r.events = m.events_consumed();
    if (r.verdict == Verdict::Violated) ++report.violated_count;
    if (m.max_residual_nodes() > report.max_residual_nodes) {
      report.max_residual_nodes = m.max_residual_nodes();
    }
    report.requirements.push_back(std::move(r));
  }
  return report;
}

}  // namespace

RunReport run_all(const RequirementSet& requirements, TraceReader& reader,
                  const RunOptions& options) {
  return run_loop(requirements, [&reader] { return reader.next(); }, options);
}

RunReport run_all(const RequirementSet& requirements,
                  const TimedStateSequence& trace, const RunOptions& options) {
  std::size_t pos = 0;
  auto source = [&trace, &pos]() -> std::optional<TimedState> {
    if (pos >= trace.size()) return std::nullopt;
    return trace.events()[pos++];
  };
  return run_loop(requirements, source, options);
}

}  // namespace mtlmon
