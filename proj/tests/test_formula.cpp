#include <doctest.h>

#include <set>

#include "mtlmon/formula.hpp"
#include "mtlmon/oracle.hpp"

using namespace mtlmon;

namespace {
const Formula p = Formula::atom("p");
const Formula q = Formula::atom("q");
const Formula r = Formula::atom("r");
}  // namespace

TEST_CASE("empty connectives are the logical constants") {
  CHECK(Formula::and_of({}).is_true());
  CHECK(Formula::xor_of({}).is_false());
  CHECK(Formula::truth().is_constant());
  CHECK_FALSE(p.is_constant());
}

TEST_CASE("raw construction applies no rewriting") {
  Formula u = Formula::until(Interval::closed(0, 10), p, q);
  CHECK(u.kind() == FormulaKind::Until);
  CHECK(structural_equal(u.lhs(), p));
  CHECK(structural_equal(u.rhs(), q));
  CHECK(u.interval() == Interval::closed(0, 10));

  // duplicates survive until canonicalization
  CHECK(Formula::and_of({p, p}).children().size() == 2);
}

TEST_CASE("structural equality is set-reordering invariant") {
  CHECK(structural_equal(Formula::and_of({p, q}), Formula::and_of({q, p})));
  CHECK(Formula::and_of({p, q}).hash() == Formula::and_of({q, p}).hash());
  CHECK_FALSE(structural_equal(
      Formula::until(Interval::closed(0, 10), p, q),
      Formula::until(Interval::make(0, true, 10, false), p, q)));
  // structural, not semantic: p vs !!p
  CHECK_FALSE(structural_equal(p, make_not(make_not(p))));
}

TEST_CASE("structural equality is an equivalence with a consistent hash") {
  std::vector<Formula> samples;
  for (std::uint64_t s = 0; s < 60; ++s) {
    samples.push_back(random_formula(s, 3, {"p", "q"}));
  }
  for (const Formula& a : samples) {
    CHECK(structural_equal(a, a));
    for (const Formula& b : samples) {
      CHECK(structural_equal(a, b) == structural_equal(b, a));
      if (structural_equal(a, b)) CHECK(a.hash() == b.hash());
      for (const Formula& c : samples) {
        if (structural_equal(a, b) && structural_equal(b, c)) {
          CHECK(structural_equal(a, c));
        }
      }
    }
  }
}

TEST_CASE("negation desugars to true xor f") {
  Formula n = make_not(p);
  CHECK(n.kind() == FormulaKind::Xor);
  CHECK(structural_equal(n, Formula::xor_of({Formula::truth(), p})));
}

TEST_CASE("finally desugars to true U f") {
  Formula f = make_finally(Interval::zero_to_inf(), q);
  CHECK(structural_equal(
      f, Formula::until(Interval::zero_to_inf(), Formula::truth(), q)));
}

TEST_CASE("globally desugars through finally") {
  Formula g = make_globally(Interval::zero_to_inf(), p);
  Formula expected = make_not(Formula::until(Interval::zero_to_inf(),
                                             Formula::truth(), make_not(p)));
  CHECK(structural_equal(g, expected));
}

TEST_CASE("or and implies desugar per the derivation rules") {
  CHECK(structural_equal(
      make_or({p, q}),
      make_not(Formula::and_of({make_not(p), make_not(q)}))));
  CHECK(structural_equal(
      make_implies(p, q),
      make_not(Formula::and_of({p, make_not(q)}))));
}

TEST_CASE("timed trigger expands to the response pattern") {
  Interval window = Interval::closed(0, 60);
  Formula tt = timed_trigger(window, p, q);
  Interval unb = Interval::zero_to_inf();
  Formula rising = Formula::and_of({make_not(p), Formula::next(unb, p)});
  Formula obligation = Formula::next(unb, make_finally(window, q));
  Formula expected =
      make_globally(unb, make_implies(rising, obligation));
  CHECK(structural_equal(tt, expected));

  // the delayed form builds from the same pieces
  Formula delayed = Formula::and_of(
      {make_not(timed_trigger(Interval::closed(0, 30), p, q)),
       timed_trigger(Interval::make(30, false, 60, true), p, q)});
  CHECK(delayed.kind() == FormulaKind::And);
  std::set<std::string> atoms;
  collect_atoms(delayed, atoms);
  CHECK(atoms == std::set<std::string>{"p", "q"});
}

TEST_CASE("printer renders primitives with reparsable precedence") {
  CHECK(to_string(Formula::truth()) == "true");
  CHECK(to_string(Formula::falsity()) == "false");
  CHECK(to_string(Formula::until(Interval::closed(0, 10), p, q)) ==
        "p U[0,10] q");
  CHECK(to_string(Formula::next(Interval::zero_to_inf(), p)) == "X p");
  // xor binds looser than &, so the xor child is parenthesized
  Formula x = Formula::and_of({p, Formula::xor_of({q, r})});
  std::string s = to_string(x);
  bool ok = s == "p & (q xor r)" || s == "p & (r xor q)" ||
            s == "(q xor r) & p" || s == "(r xor q) & p";
  CHECK(ok);
}
