#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "mtlmon/interval.hpp"

namespace mtlmon {

enum class FormulaKind : std::uint8_t { Atom, And, Xor, Next, Until };

/// Immutable MTL formula over the five primitives: proposition atoms,
/// set-valued conjunction and exclusive-or, and interval-annotated
/// next/until. The logical constants are the empty connectives:
/// true = And{}, false = Xor{}.
///
/// A Formula is a cheap value handle onto a shared immutable node, so
/// subterms are shared freely and any formula may be read concurrently.
/// And/Xor children are kept sorted under a total structural order, which
/// makes structural equality insensitive to the order children were given
/// in (set semantics) and gives every formula a cached hash consistent
/// with that equality.
class Formula {
 public:
  static Formula atom(std::string name);
  static Formula and_of(std::vector<Formula> children);
  static Formula xor_of(std::vector<Formula> children);
  static Formula next(const Interval& interval, Formula body);
  static Formula until(const Interval& interval, Formula lhs, Formula rhs);

  static Formula truth() { return and_of({}); }
  static Formula falsity() { return xor_of({}); }

  FormulaKind kind() const;
  const std::string& atom_name() const;            // Atom only
  const std::vector<Formula>& children() const;    // And/Xor
  const Interval& interval() const;                // Next/Until
  const Formula& body() const;                     // Next
  const Formula& lhs() const;                      // Until
  const Formula& rhs() const;                      // Until

  bool is_true() const;
  bool is_false() const;
  bool is_constant() const { return is_true() || is_false(); }

  std::size_t hash() const;
  /// Number of nodes in the syntax tree (shared subterms counted per use).
  std::size_t node_count() const;
  /// Stable identity of the underlying shared node; useful as a cache key.
  const void* identity() const { return node_.get(); }

  friend int compare(const Formula& a, const Formula& b);

  bool operator==(const Formula& o) const { return compare(*this, o) == 0; }
  bool operator!=(const Formula& o) const { return !(*this == o); }

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// True iff the formulas are identical up to set-reordering of And/Xor
/// children (which construction already normalizes).
inline bool structural_equal(const Formula& a, const Formula& b) {
  return compare(a, b) == 0;
}

inline bool formula_less(const Formula& a, const Formula& b) {
  return compare(a, b) < 0;
}

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

// Derived operators, desugared to primitives at construction time.
// The rewrite engine only ever sees the five primitives.

/// !f  =  true xor f
Formula make_not(Formula f);
/// f1 | ... | fn  =  !(!f1 & ... & !fn)
Formula make_or(std::vector<Formula> fs);
/// a -> b  =  !(a & !b)
Formula make_implies(Formula a, Formula b);
/// F_I f  =  true U_I f
Formula make_finally(const Interval& interval, Formula f);
/// G_I f  =  !F_I !f
Formula make_globally(const Interval& interval, Formula f);

/// The requirement pattern "when trigger becomes true, response must hold
/// within the window":  G( (!trigger & X trigger) -> X(F_I response) ),
/// with the outer G and both X over [0, inf).
Formula timed_trigger(const Interval& window, Formula trigger,
                      Formula response);

/// Collects the names of every atom occurring in f.
void collect_atoms(const Formula& f, std::set<std::string>& out);

/// Concrete-grammar rendering; reparses to a canonically equal formula.
std::string to_string(const Formula& f);

std::ostream& operator<<(std::ostream& os, const Formula& f);

}  // namespace mtlmon
