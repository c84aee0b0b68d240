#pragma once

#include <functional>
#include <optional>
#include <string>

#include "mtlmon/formula.hpp"

namespace mtlmon {

/// Everything one derivation step needs to know about event i: the truth of
/// each proposition in state i, the timestamp tau_i, and the successor
/// timestamp (nullopt when i is the last event of the trace).
struct StepContext {
  std::function<bool(const std::string&)> atom_truth;
  double tau = 0.0;
  std::optional<double> tau_next;

  bool end_of_trace() const { return !tau_next.has_value(); }
};

/// One-event formula derivation: rewrites a canonical formula with respect
/// to event i into the canonical residual obligation on the rest of the
/// trace. Rules:
///
///   atom        -> its truth value in the state
///   and/xor     -> connective of the children's derivatives
///   X_I f       -> f when there is a successor with (tau_next - tau) in I,
///                  false otherwise (interval miss or end of trace)
///   f1 U_I f2   -> (f2' if 0 in I else false)
///                  | (f1' & (f1 U_{I - delta} f2)  when a successor exists,
///                     false at end of trace)
///
/// Throws MonotonicityError when tau_next < tau and propagates
/// UnboundPropositionError out of atom_truth.
Formula derive_step(const Formula& f, const StepContext& ctx);

/// derive_step restricted to end-of-trace contexts; every next/until
/// grounds to false and atoms ground to constants, so the result is always
/// a truth constant.
Formula derive_final(const Formula& f, const StepContext& ctx);

}  // namespace mtlmon
