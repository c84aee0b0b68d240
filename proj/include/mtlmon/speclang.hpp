#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mtlmon/formula.hpp"
#include "mtlmon/oracle.hpp"
#include "mtlmon/predicate.hpp"

namespace mtlmon {

enum class RequirementClass { Limit, TimedOrder, DelayedOrder, General };

std::string_view to_string(RequirementClass cls);

/// One named requirement, desugared to primitives and canonicalized.
struct Requirement {
  std::string name;
  Formula formula;
  std::string source_text;
  RequirementClass cls = RequirementClass::General;
};

/// A parsed specification file: predicate definitions binding proposition
/// names to variable conditions, plus the named requirements over them.
class RequirementSet {
 public:
  RequirementSet(std::map<std::string, Predicate> predicates,
                 std::vector<Requirement> requirements);

  const std::map<std::string, Predicate>& predicates() const {
    return predicates_;
  }
  const std::vector<Requirement>& requirements() const {
    return requirements_;
  }
  const Requirement* find(std::string_view name) const;

  /// Valuation that evaluates each proposition's predicate on a state.
  AtomValuation valuation() const;

 private:
  std::map<std::string, Predicate> predicates_;
  std::vector<Requirement> requirements_;
};

/// Parses a specification file. Grammar (comments run # to end of line):
///
///   spec      := (prop_def | req_def)*
///   prop_def  := "prop" IDENT ":=" predicate ";"
///   predicate := IDENT relop NUMBER | IDENT "in" interval
///              | IDENT ("="|"=="|"!=") BOOL
///   relop     := "<" | "<=" | ">" | ">=" | "==" | "!="
///   req_def   := "req" IDENT ":=" formula ";"
///
/// Formula operators, tightest first: unary {!, X, F, G}, then U, then &,
/// then xor, then |, then ->; binary connectives are right-associative.
/// Temporal operators take an optional interval suffix ([a,b], [a,b), (a,b],
/// (a,b), upper bound may be inf) defaulting to [0,inf). timedTrigger[I](a,b)
/// is a macro expanded before canonicalization.
RequirementSet parse_spec(std::string_view text);

/// Parses a bare formula into the raw (uncanonicalized) primitives-only
/// representation.
Formula parse_formula(std::string_view text);

}  // namespace mtlmon
