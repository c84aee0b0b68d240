#include <doctest.h>

#include <memory>
#include <sstream>

#include "mtlmon/canonical.hpp"
#include "mtlmon/errors.hpp"
#include "mtlmon/monitor.hpp"
#include "mtlmon/oracle.hpp"
#include "mtlmon/speclang.hpp"

using namespace mtlmon;

namespace {

Requirement req_of(const std::string& name, const Formula& f) {
  Requirement r;
  r.name = name;
  r.formula = canonicalize(f);
  r.source_text = to_string(f);
  return r;
}

TimedStateSequence bool_trace(
    const std::vector<std::string>& names,
    const std::vector<std::pair<double, std::vector<bool>>>& rows) {
  std::vector<ValueType> types(names.size(), ValueType::Boolean);
  auto schema = std::make_shared<Schema>(names, types);
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

Verdict run_monitor(Monitor& m, const TimedStateSequence& rho) {
  for (const TimedState& e : rho.events()) m.feed(e);
  return m.finish();
}

const AtomValuation val = bool_variable_valuation();
const Formula p = Formula::atom("p");

}  // namespace

TEST_CASE("constant specs get verdicts before any event") {
  Monitor t(req_of("always", Formula::truth()), val);
  CHECK(t.status() == Verdict::NotViolated);
  Monitor f(req_of("never", Formula::falsity()), val);
  CHECK(f.status() == Verdict::Violated);
  CHECK_FALSE(f.violation_time().has_value());

  Monitor open(req_of("g", make_globally(Interval::zero_to_inf(), p)), val);
  CHECK(open.status() == Verdict::NotEvaluated);
  CHECK(open.events_consumed() == 0);
}

TEST_CASE("globally stays open while satisfied and latches on violation") {
  Formula g = make_globally(Interval::zero_to_inf(), Formula::atom("p_ok"));

  // all-true trace: never conclusive before the end
  auto ok = bool_trace("p_ok" == std::string("p_ok")
                           ? std::vector<std::string>{"p_ok"}
                           : std::vector<std::string>{},
                       {{0, {true}}, {1, {true}}, {2, {true}}});
  Monitor m1(req_of("g", g), val);
  for (const TimedState& e : ok.events()) {
    CHECK(m1.feed(e) == Verdict::NotEvaluated);
  }
  CHECK(m1.finish() == Verdict::NotViolated);
  CHECK(oracle_evaluate(ok, 1, canonicalize(g), val));

  // p_ok fails at event 3 (t=2); detected when event 4 arrives
  auto bad = bool_trace({"p_ok"}, {{0, {true}},
                                   {1, {true}},
                                   {2, {false}},
                                   {3, {true}}});
  Monitor m2(req_of("g", g), val);
  CHECK(m2.feed(bad.events()[0]) == Verdict::NotEvaluated);
  CHECK(m2.feed(bad.events()[1]) == Verdict::NotEvaluated);
  CHECK(m2.feed(bad.events()[2]) == Verdict::NotEvaluated);  // buffered only
  CHECK(m2.feed(bad.events()[3]) == Verdict::Violated);
  CHECK(m2.violation_time() == 2.0);

  // latching: more events do not move the verdict or the timestamp
  TimedState extra = bad.events()[3];
  extra.tau = 9.0;
  CHECK(m2.feed(extra) == Verdict::Violated);
  CHECK(m2.violation_time() == 2.0);
  CHECK(m2.finish() == Verdict::Violated);
  CHECK_FALSE(oracle_evaluate(bad, 1, canonicalize(g), val));
}

TEST_CASE("timed trigger stays inconclusive while the outer globally lives") {
  Formula tt = timed_trigger(Interval::closed(0, 60), Formula::atom("p1"),
                             Formula::atom("p2"));
  // p1 rises at t=10, p2 answers at t=45
  std::vector<std::pair<double, std::vector<bool>>> rows;
  for (double t = 0; t <= 80; t += 5) {
    bool p1 = t >= 10;
    bool p2 = t >= 45;
    rows.push_back({t, {p1, p2}});
  }
  auto rho = bool_trace({"p1", "p2"}, rows);
  Monitor m(req_of("tt", tt), val);
  for (const TimedState& e : rho.events()) {
    CHECK(m.feed(e) == Verdict::NotEvaluated);
  }
  CHECK(m.finish() == Verdict::NotViolated);
  CHECK(oracle_evaluate(rho, 1, canonicalize(tt), val));
}

TEST_CASE("finish closes unmet windows as violations") {
  // F[0,60] p2 with p2 never true and the trace ending at t=30
  Formula f = make_finally(Interval::closed(0, 60), Formula::atom("p2"));
  auto rho = bool_trace({"p2"}, {{0, {false}}, {15, {false}}, {30, {false}}});
  Monitor m(req_of("f", f), val);
  for (const TimedState& e : rho.events()) m.feed(e);
  CHECK(m.finish() == Verdict::Violated);
  CHECK(m.violation_time() == 30.0);  // detected at the final event
  CHECK_FALSE(oracle_evaluate(rho, 1, canonicalize(f), val));
}

TEST_CASE("finish is conclusive and idempotent; feeding after it throws") {
  Formula g = make_globally(Interval::zero_to_inf(), p);
  auto rho = bool_trace({"p"}, {{0, {true}}, {1, {true}}});
  Monitor m(req_of("g", g), val);
  for (const TimedState& e : rho.events()) m.feed(e);
  Verdict v = m.finish();
  CHECK(v != Verdict::NotEvaluated);
  CHECK(m.finish() == v);
  CHECK_THROWS_AS(m.feed(rho.events()[0]), Error);
}

TEST_CASE("finish with zero events is an empty-trace error") {
  Monitor m(req_of("g", make_globally(Interval::zero_to_inf(), p)), val);
  CHECK_THROWS_AS(m.finish(), EmptyTraceError);
}

TEST_CASE("decreasing timestamps are rejected") {
  Monitor m(req_of("g", make_globally(Interval::zero_to_inf(), p)), val);
  auto rho = bool_trace({"p"}, {{5, {true}}});
  m.feed(rho.events()[0]);
  TimedState back = rho.events()[0];
  back.tau = 3.0;
  CHECK_THROWS_AS(m.feed(back), MonotonicityError);
}

TEST_CASE("monitor verdicts agree with the oracle on random pairs") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Formula f = canonicalize(random_formula(seed, 3, {"p", "q"}));
    auto rho = random_trace(seed + 7000, 6, {"p", "q"});
    Monitor m(req_of("r", f), val);
    Verdict v = run_monitor(m, rho);
    REQUIRE(v != Verdict::NotEvaluated);
    CHECK((v == Verdict::NotViolated) == oracle_evaluate(rho, 1, f, val));
  }
}

TEST_CASE("a feed-time violation is violated on every prefix extension") {
  std::size_t found = 0;
  for (std::uint64_t seed = 0; found < 25 && seed < 4000; ++seed) {
    Formula f = canonicalize(random_formula(seed, 3, {"p", "q"}));
    auto rho = random_trace(seed + 3000, 6, {"p", "q"});
    Monitor m(req_of("r", f), val);
    std::size_t violated_at = 0;
    for (std::size_t k = 0; k < rho.size(); ++k) {
      if (m.feed(rho.events()[k]) == Verdict::Violated) {
        violated_at = k + 1;
        break;
      }
    }
    if (violated_at == 0) continue;
    ++found;
    // closing the k-prefix now must judge it false...
    auto schema = rho.schema();
    std::vector<TimedState> prefix(rho.events().begin(),
                                   rho.events().begin() + violated_at);
    TimedStateSequence closed(schema, prefix);
    CHECK_FALSE(oracle_evaluate(closed, 1, f, val));
    // ...and so must every extension of that prefix.
    for (std::uint64_t ext = 0; ext < 3; ++ext) {
      auto tail = random_trace(seed + 12000 + ext, 3, {"p", "q"});
      std::vector<TimedState> extended = prefix;
      double base = prefix.back().tau;
      for (TimedState e : tail.events()) {
        e.schema = schema;
        e.tau += base;
        extended.push_back(std::move(e));
      }
      TimedStateSequence longer(schema, std::move(extended));
      CHECK_FALSE(oracle_evaluate(longer, 1, f, val));
    }
  }
  CHECK(found >= 25);  // the sample actually exercised the property
}

TEST_CASE("run_all with no requirements reports an empty section") {
  RequirementSet empty({}, {});
  auto rho = bool_trace({"p"}, {{0, {true}}, {1, {false}}});
  RunReport report = run_all(empty, rho);
  CHECK(report.requirements.empty());
  CHECK(report.violated_count == 0);
  CHECK(report.total_events == 2);
}

TEST_CASE("run_all matches single-monitor runs requirement by requirement") {
  auto spec = parse_spec(
      "prop a := p = true;\n"
      "prop b := q = true;\n"
      "req r1 := G a;\n"
      "req r2 := F[0,3] b;\n"
      "req r3 := a U[0,4] b;\n"
      "req r4 := timedTrigger[0,2](a, b);\n");
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto rho = random_trace(seed, 7, {"p", "q"});
    RunReport report = run_all(spec, rho);
    REQUIRE(report.requirements.size() == 4);
    for (const RequirementResult& rr : report.requirements) {
      Monitor alone(*spec.find(rr.name), spec.valuation());
      for (const TimedState& e : rho.events()) alone.feed(e);
      alone.finish();
      CHECK(alone.status() == rr.verdict);
      CHECK(alone.violation_time() == rr.violation_time);
      CHECK(rr.events == rho.size());
    }
  }
}

TEST_CASE("run_all annotates failures with the requirement name") {
  auto spec = parse_spec(
      "prop a := missing_var > 1;\n"
      "req r1 := G a;\n");
  auto rho = bool_trace({"p"}, {{0, {true}}, {1, {true}}});
  CHECK_THROWS_WITH_AS(run_all(spec, rho), doctest::Contains("r1"), RunError);
}

TEST_CASE("the residual ceiling aborts pathological growth") {
  // xor of two untils doubles its monomials every step against an
  // alternating trace; a tiny ceiling must trip.
  auto spec = parse_spec(
      "prop a := p = true;\n"
      "req r := (a U[0,100] (a & a)) xor (a U[0,100] (a xor a));\n");
  std::vector<std::pair<double, std::vector<bool>>> rows;
  for (double t = 0; t < 12; ++t) rows.push_back({t, {true}});
  auto rho = bool_trace({"p"}, rows);
  RunOptions tight;
  tight.residual_ceiling = 3;
  CHECK_THROWS_AS(run_all(spec, rho, tight), ResidualCeilingError);
}
