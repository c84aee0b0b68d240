#include "mtlmon/interval.hpp"

#include <charconv>
#include <cmath>
#include <functional>

#include "mtlmon/errors.hpp"

namespace mtlmon {

namespace {

// Collapses -0.0 to 0.0 so equality, hashing and printing agree.
double normalize_zero(double v) { return v == 0.0 ? 0.0 : v; }

}  // namespace

Interval Interval::make(double lower, bool lower_closed, double upper,
                        bool upper_closed) {
  if (std::isnan(lower)) throw IntervalError("interval lower bound is NaN");
  if (std::isnan(upper)) throw IntervalError("interval upper bound is NaN");
  if (std::isinf(lower)) {
    throw IntervalError("interval lower bound must be finite");
  }
  if (std::isinf(upper)) {
    upper_closed = false;  // closedness is meaningless at +inf
    if (upper < 0) throw IntervalError("interval upper bound is -inf");
  } else if (lower > upper) {
    throw IntervalError("interval lower bound " + format_number(lower) +
                        " exceeds upper bound " + format_number(upper));
  } else if (lower == upper && !(lower_closed && upper_closed)) {
    throw IntervalError("empty interval: singleton bound " +
                        format_number(lower) +
                        " requires both ends closed, got " +
                        std::string(lower_closed ? "[" : "(") +
                        format_number(lower) + "," + format_number(upper) +
                        std::string(upper_closed ? "]" : ")"));
  }
  Interval iv;
  iv.lower = normalize_zero(lower);
  iv.upper = normalize_zero(upper);
  iv.lower_closed = lower_closed;
  iv.upper_closed = upper_closed;
  return iv;
}

bool Interval::upper_unbounded() const { return std::isinf(upper); }

bool Interval::contains(double t) const {
  if (lower_closed ? t < lower : t <= lower) return false;
  if (upper_unbounded()) return true;
  return upper_closed ? t <= upper : t < upper;
}

Interval Interval::shifted(double delta) const {
  if (delta < 0) {
    throw MonotonicityError("interval shift by negative delta " +
                            format_number(delta) +
                            " (trace timestamps must be non-decreasing)");
  }
  Interval iv = *this;
  iv.lower = normalize_zero(lower - delta);
  iv.upper = upper_unbounded() ? upper : normalize_zero(upper - delta);
  return iv;
}

int compare(const Interval& a, const Interval& b) {
  if (a.lower != b.lower) return a.lower < b.lower ? -1 : 1;
  if (a.lower_closed != b.lower_closed) return a.lower_closed ? -1 : 1;
  if (a.upper != b.upper) return a.upper < b.upper ? -1 : 1;
  if (a.upper_closed != b.upper_closed) return a.upper_closed ? -1 : 1;
  return 0;
}

std::size_t hash_value(const Interval& iv) {
  std::size_t h = std::hash<double>{}(iv.lower);
  h ^= std::hash<double>{}(iv.upper) + 0x9e3779b97f4a7c15ULL + (h << 6) +
       (h >> 2);
  h ^= (static_cast<std::size_t>(iv.lower_closed) << 1 |
        static_cast<std::size_t>(iv.upper_closed)) +
       0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::string to_string(const Interval& iv) {
  std::string s(iv.lower_closed ? "[" : "(");
  s += format_number(iv.lower);
  s += ",";
  s += iv.upper_unbounded() ? "inf" : format_number(iv.upper);
  s += iv.upper_unbounded() ? ")" : (iv.upper_closed ? "]" : ")");
  return s;
}

std::string format_number(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace mtlmon
