#pragma once

#include <string>

#include "mtlmon/interval.hpp"
#include "mtlmon/trace.hpp"

namespace mtlmon {

enum class Relation { Lt, Le, Gt, Ge, Eq, Ne, InRange, BoolEq, BoolNe };

/// Concrete meaning of a proposition: a condition on one state variable.
struct Predicate {
  std::string variable;
  Relation relation = Relation::Eq;
  double threshold = 0.0;   // Lt..Ne
  bool bool_value = false;  // BoolEq/BoolNe
  Interval range;           // InRange, open/closed flags honored

  static Predicate numeric(std::string variable, Relation rel,
                           double threshold);
  static Predicate in_range(std::string variable, const Interval& range);
  static Predicate boolean(std::string variable, bool equals, bool value);
};

/// Truth of the predicate in one state. Throws UnknownVariableError when the
/// variable is absent and TypeMismatchError when the relation does not fit
/// the variable's type (booleans only admit =/!= against true/false).
bool eval_predicate(const Predicate& pred, const TimedState& state);

std::string to_string(const Predicate& pred);

}  // namespace mtlmon
