#include "mtlmon/predicate.hpp"

#include "mtlmon/errors.hpp"

namespace mtlmon {

Predicate Predicate::numeric(std::string variable, Relation rel,
                             double threshold) {
  Predicate p;
  p.variable = std::move(variable);
  p.relation = rel;
  p.threshold = threshold;
  return p;
}

Predicate Predicate::in_range(std::string variable, const Interval& range) {
  Predicate p;
  p.variable = std::move(variable);
  p.relation = Relation::InRange;
  p.range = range;
  return p;
}

Predicate Predicate::boolean(std::string variable, bool equals, bool value) {
  Predicate p;
  p.variable = std::move(variable);
  p.relation = equals ? Relation::BoolEq : Relation::BoolNe;
  p.bool_value = value;
  return p;
}

bool eval_predicate(const Predicate& pred, const TimedState& state) {
  const Value* v = state.find(pred.variable);
  if (v == nullptr) {
    throw UnknownVariableError("variable '" + pred.variable +
                               "' not present in trace state");
  }
  if (pred.relation == Relation::BoolEq || pred.relation == Relation::BoolNe) {
    if (!std::holds_alternative<bool>(*v)) {
      throw TypeMismatchError("predicate on '" + pred.variable +
                              "' expects a boolean variable");
    }
    bool b = std::get<bool>(*v);
    return pred.relation == Relation::BoolEq ? b == pred.bool_value
                                             : b != pred.bool_value;
  }
  if (!std::holds_alternative<double>(*v)) {
    throw TypeMismatchError("relational predicate on boolean variable '" +
                            pred.variable + "'");
  }
  double x = std::get<double>(*v);
  switch (pred.relation) {
    case Relation::Lt:
      return x < pred.threshold;
    case Relation::Le:
      return x <= pred.threshold;
    case Relation::Gt:
      return x > pred.threshold;
    case Relation::Ge:
      return x >= pred.threshold;
    case Relation::Eq:
      return x == pred.threshold;
    case Relation::Ne:
      return x != pred.threshold;
    case Relation::InRange:
      return pred.range.contains(x);
    default:
      return false;  // unreachable
  }
}

std::string to_string(const Predicate& pred) {
  switch (pred.relation) {
    case Relation::Lt:
      return pred.variable + " < " + format_number(pred.threshold);
    case Relation::Le:
      return pred.variable + " <= " + format_number(pred.threshold);
    case Relation::Gt:
      return pred.variable + " > " + format_number(pred.threshold);
    case Relation::Ge:
      return pred.variable + " >= " + format_number(pred.threshold);
    case Relation::Eq:
      return pred.variable + " == " + format_number(pred.threshold);
    case Relation::Ne:
      return pred.variable + " != " + format_number(pred.threshold);
    case Relation::InRange:
      return pred.variable + " in " + to_string(pred.range);
    case Relation::BoolEq:
      return pred.variable + " = " + (pred.bool_value ? "true" : "false");
    case Relation::BoolNe:
      return pred.variable + " != " + (pred.bool_value ? "true" : "false");
  }
  return pred.variable;
}

}  // namespace mtlmon
