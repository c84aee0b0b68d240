#include <doctest.h>

#include <memory>

#include "mtlmon/errors.hpp"
#include "mtlmon/oracle.hpp"

using namespace mtlmon;

namespace {

const Formula p = Formula::atom("p");
const Formula q = Formula::atom("q");

// Builds a trace over boolean variables with explicit timestamps.
TimedStateSequence make_bool_trace(
    const std::vector<std::string>& names,
    const std::vector<std::pair<double, std::vector<bool>>>& rows) {
  std::vector<ValueType> types(names.size(), ValueType::Boolean);
  auto schema = std::make_shared<Schema>(names, std::move(types));
  std::vector<TimedState> events;
  for (const auto& [t, vals] : rows) {
    TimedState e;
    e.tau = t;
    e.schema = schema;
    for (bool b : vals) e.values.push_back(Value(b));
    events.push_back(std::move(e));
  }
  return TimedStateSequence(std::move(schema), std::move(events));
}

const AtomValuation val = bool_variable_valuation();

}  // namespace

TEST_CASE("globally over a universally true atom holds") {
  auto rho = make_bool_trace({"p"}, {{0, {true}}, {1, {true}}, {2, {true}}});
  CHECK(oracle_evaluate(rho, 1, make_globally(Interval::zero_to_inf(), p),
                        val));
}

TEST_CASE("the empty exclusive-or is false everywhere") {
  auto rho = make_bool_trace({"p"}, {{0, {true}}, {1, {false}}});
  CHECK_FALSE(oracle_evaluate(rho, 1, Formula::falsity(), val));
  CHECK_FALSE(oracle_evaluate(rho, 2, Formula::falsity(), val));
}

TEST_CASE("finally respects the time window") {
  auto rho = make_bool_trace({"q"}, {{0, {false}}, {1.5, {true}}});
  CHECK(oracle_evaluate(rho, 1, make_finally(Interval::closed(0, 2), q), val));
  CHECK_FALSE(
      oracle_evaluate(rho, 1, make_finally(Interval::closed(0, 1), q), val));
}

TEST_CASE("next requires a successor inside the window") {
  auto rho = make_bool_trace({"p"}, {{0, {false}}, {3, {true}}});
  CHECK(oracle_evaluate(rho, 1, Formula::next(Interval::closed(0, 5), p),
                        val));
  CHECK_FALSE(oracle_evaluate(
      rho, 1, Formula::next(Interval::closed(0, 2), p), val));
  // no successor at the last index
  CHECK_FALSE(oracle_evaluate(
      rho, 2, Formula::next(Interval::zero_to_inf(), p), val));
}

TEST_CASE("until needs the left side to hold up to the witness") {
  auto rho = make_bool_trace(
      {"p", "q"},
      {{0, {true, false}}, {1, {false, false}}, {2, {true, true}}});
  // q's witness is at t=2 but p fails at t=1
  CHECK_FALSE(oracle_evaluate(
      rho, 1, Formula::until(Interval::zero_to_inf(), p, q), val));
  CHECK(oracle_evaluate(
      rho, 2, Formula::until(Interval::zero_to_inf(), make_not(p), q), val));
}

TEST_CASE("index bounds are 1-based and checked") {
  auto rho = make_bool_trace({"p"}, {{0, {true}}});
  CHECK_THROWS_AS(oracle_evaluate(rho, 0, p, val), TraceIndexError);
  CHECK_THROWS_AS(oracle_evaluate(rho, 2, p, val), TraceIndexError);
}

TEST_CASE("unbound atoms are reported by name") {
  auto rho = make_bool_trace({"p"}, {{0, {true}}});
  try {
    oracle_evaluate(rho, 1, Formula::atom("ghost"), val);
    FAIL("expected UnboundPropositionError");
  } catch (const UnboundPropositionError& e) {
    CHECK(e.atom() == "ghost");
  }
}

TEST_CASE("generators are deterministic in the seed") {
  for (std::uint64_t seed : {1ULL, 2ULL, 99ULL}) {
    CHECK(structural_equal(random_formula(seed, 3, {"p", "q"}),
                           random_formula(seed, 3, {"p", "q"})));
    auto t1 = random_trace(seed, 6, {"p", "q"});
    auto t2 = random_trace(seed, 6, {"p", "q"});
    REQUIRE(t1.size() == t2.size());
    for (std::size_t i = 0; i < t1.size(); ++i) {
      CHECK(t1.events()[i].tau == t2.events()[i].tau);
      CHECK(t1.events()[i].values == t2.events()[i].values);
    }
  }
}

TEST_CASE("depth-0 formulas are leaves") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Formula f = random_formula(seed, 0, {"p"});
    bool leaf = f.kind() == FormulaKind::Atom || f.is_constant();
    CHECK(leaf);
  }
}

TEST_CASE("random traces have non-decreasing timestamps starting at 0") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto rho = random_trace(seed, 8, {"p"});
    CHECK(rho.events().front().tau == 0.0);
    for (std::size_t i = 0; i + 1 < rho.size(); ++i) {
      CHECK(rho.events()[i].tau <= rho.events()[i + 1].tau);
    }
  }
  CHECK(random_trace(3, 1, {"p"}).size() == 1);
}

namespace {

// Direct encodings of the derived operators' satisfaction clauses, used as
// an independent cross-check of the desugaring.
bool direct_not(const TimedStateSequence& rho, std::size_t i,
                const Formula& f) {
  return !oracle_evaluate(rho, i, f, val);
}

bool direct_or(const TimedStateSequence& rho, std::size_t i,
               const std::vector<Formula>& fs) {
  for (const Formula& f : fs) {
    if (oracle_evaluate(rho, i, f, val)) return true;
  }
  return false;
}

bool direct_implies(const TimedStateSequence& rho, std::size_t i,
                    const Formula& a, const Formula& b) {
  return !(oracle_evaluate(rho, i, a, val) && !oracle_evaluate(rho, i, b, val));
}

bool direct_finally(const TimedStateSequence& rho, std::size_t i,
                    const Interval& window, const Formula& f) {
  double t_i = rho.events()[i - 1].tau;
  for (std::size_t j = i; j <= rho.size(); ++j) {
    if (window.contains(rho.events()[j - 1].tau - t_i) &&
        oracle_evaluate(rho, j, f, val)) {
      return true;
    }
  }
  return false;
}

bool direct_globally(const TimedStateSequence& rho, std::size_t i,
                     const Interval& window, const Formula& f) {
  double t_i = rho.events()[i - 1].tau;
  for (std::size_t j = i; j <= rho.size(); ++j) {
    if (window.contains(rho.events()[j - 1].tau - t_i) &&
        !oracle_evaluate(rho, j, f, val)) {
      return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("derived operators match their direct clauses exhaustively") {
  // All boolean valuations of 2 atoms over traces of length 1..4 (unit
  // steps plus one zero increment), derived-operator nesting depth <= 2.
  const std::vector<std::string> atoms = {"p", "q"};
  const std::vector<Interval> windows = {
      Interval::zero_to_inf(), Interval::closed(0, 2),
      Interval::make(0, false, 2, true), Interval::make(1, true, 3, false)};

  for (std::size_t len = 1; len <= 4; ++len) {
    for (unsigned mask = 0; mask < (1u << (2 * len)); ++mask) {
      std::vector<std::pair<double, std::vector<bool>>> rows;
      for (std::size_t k = 0; k < len; ++k) {
        // one repeated timestamp to exercise zero deltas
        double t = k < 2 ? 0.0 : static_cast<double>(k - 1);
        rows.push_back({t,
                        {((mask >> (2 * k)) & 1) != 0,
                         ((mask >> (2 * k + 1)) & 1) != 0}});
      }
      auto rho = make_bool_trace(atoms, rows);

      std::vector<Formula> subs = {p, q, make_not(p), make_or({p, q})};
      for (std::size_t i = 1; i <= len; ++i) {
        for (const Formula& f : subs) {
          CHECK(oracle_evaluate(rho, i, make_not(f), val) ==
                direct_not(rho, i, f));
        }
        CHECK(oracle_evaluate(rho, i, make_or({p, q}), val) ==
              direct_or(rho, i, {p, q}));
        CHECK(oracle_evaluate(rho, i, make_or({p, q, make_not(p)}), val) ==
              direct_or(rho, i, {p, q, make_not(p)}));
        CHECK(oracle_evaluate(rho, i, make_implies(p, q), val) ==
              direct_implies(rho, i, p, q));
        for (const Interval& w : windows) {
          for (const Formula& f : subs) {
            CHECK(oracle_evaluate(rho, i, make_finally(w, f), val) ==
                  direct_finally(rho, i, w, f));
            CHECK(oracle_evaluate(rho, i, make_globally(w, f), val) ==
                  direct_globally(rho, i, w, f));
          }
        }
      }
    }
  }
}

TEST_CASE("until implies finally on the same window") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    auto rho = random_trace(seed, 6, {"p", "q"});
    Formula a = random_formula(seed * 2 + 1, 2, {"p", "q"});
    Formula b = random_formula(seed * 2 + 2, 2, {"p", "q"});
    Interval w = seed % 2 == 0 ? Interval::zero_to_inf()
                               : Interval::closed(0, 3);
    if (oracle_evaluate(rho, 1, Formula::until(w, a, b), val)) {
      CHECK(oracle_evaluate(rho, 1, make_finally(w, b), val));
    }
  }
}

TEST_CASE("globally and finally are duals") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    auto rho = random_trace(seed, 6, {"p", "q"});
    Formula f = random_formula(seed + 5000, 2, {"p", "q"});
    Interval w = seed % 2 == 0 ? Interval::zero_to_inf()
                               : Interval::make(0, true, 4, false);
    CHECK(oracle_evaluate(rho, 1, make_globally(w, f), val) ==
          !oracle_evaluate(rho, 1, make_finally(w, make_not(f)), val));
  }
}
