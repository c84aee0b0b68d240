#pragma once

#include <cstddef>
#include <limits>
#include <string>

namespace mtlmon {

/// Real interval with independently open/closed bounds and a possibly
/// unbounded upper end. Temporal operators carry one of these; user-written
/// intervals start at lower >= 0, but shifting during progression may push
/// the lower bound negative.
struct Interval {
  double lower = 0.0;
  double upper = std::numeric_limits<double>::infinity();
  bool lower_closed = true;
  bool upper_closed = false;  // meaningless (kept false) when upper is +inf

  /// Validating factory. Rejects NaN bounds, lower > upper, and empty
  /// singletons ([a,a] needs both bounds closed to be non-empty).
  static Interval make(double lower, bool lower_closed, double upper,
                       bool upper_closed);

  static Interval closed(double lower, double upper) {
    return make(lower, true, upper, true);
  }

  /// [0, inf) — the default window of untimed temporal operators.
  static Interval zero_to_inf() { return make(0.0, true, infinity(), false); }

  static double infinity() { return std::numeric_limits<double>::infinity(); }

  bool upper_unbounded() const;
  bool contains(double t) const;
  bool contains_zero() const { return contains(0.0); }

  /// Both bounds reduced by delta, openness preserved, +inf stays +inf.
  /// delta < 0 signals a decreasing trace and raises MonotonicityError.
  Interval shifted(double delta) const;

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Total order consistent with operator==; used to sort set children.
int compare(const Interval& a, const Interval& b);

std::size_t hash_value(const Interval& iv);

/// Renders the concrete-grammar literal, e.g. "[0,60]", "(30,60]", "[0,inf)".
std::string to_string(const Interval& iv);

/// Shortest decimal representation that round-trips through parsing.
std::string format_number(double v);

}  // namespace mtlmon
