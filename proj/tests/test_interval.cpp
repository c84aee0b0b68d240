#include <doctest.h>

#include <random>

#include "mtlmon/errors.hpp"
#include "mtlmon/interval.hpp"

using namespace mtlmon;

TEST_CASE("interval construction validates bounds") {
  CHECK_NOTHROW(Interval::closed(0, 10));
  CHECK_NOTHROW(Interval::closed(2, 2));  // singleton, both closed
  CHECK_THROWS_AS(Interval::make(5, true, 3, true), IntervalError);
  CHECK_THROWS_AS(Interval::make(2, false, 2, true), IntervalError);
  CHECK_THROWS_AS(Interval::make(2, true, 2, false), IntervalError);
  // closedness at +inf is normalized away
  CHECK(Interval::make(0, true, Interval::infinity(), true) ==
        Interval::zero_to_inf());
}

TEST_CASE("interval membership honors open/closed bounds") {
  CHECK(Interval::closed(0, 10).contains_zero());
  CHECK_FALSE(Interval::make(0, false, 10, true).contains_zero());
  CHECK(Interval::make(-3, true, 7, true).contains_zero());
  CHECK(Interval::zero_to_inf().contains(1e12));
  CHECK_FALSE(Interval::make(0, true, 10, false).contains(10));
  CHECK(Interval::closed(0, 10).contains(10));
}

TEST_CASE("interval shift moves both bounds and keeps openness") {
  CHECK(Interval::closed(0, 10).shifted(3) == Interval::closed(-3, 7));
  CHECK(Interval::make(5, true, Interval::infinity(), false).shifted(0) ==
        Interval::make(5, true, Interval::infinity(), false));
  CHECK(Interval::make(2, false, 8, true).shifted(2) ==
        Interval::make(0, false, 6, true));
  CHECK_THROWS_AS(Interval::closed(0, 10).shifted(-1), MonotonicityError);
}

TEST_CASE("shift composes additively") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    double lo = static_cast<double>(rng() % 20);
    double hi = lo + static_cast<double>(rng() % 20) + 1;
    Interval iv = Interval::make(lo, rng() % 2 == 0, hi, rng() % 2 == 0);
    double a = static_cast<double>(rng() % 16) / 2.0;
    double b = static_cast<double>(rng() % 16) / 2.0;
    CHECK(iv.shifted(a).shifted(b) == iv.shifted(a + b));
  }
}

TEST_CASE("interval rendering") {
  CHECK(to_string(Interval::closed(0, 60)) == "[0,60]");
  CHECK(to_string(Interval::make(30, false, 60, true)) == "(30,60]");
  CHECK(to_string(Interval::zero_to_inf()) == "[0,inf)");
  CHECK(to_string(Interval::closed(27.9, 28.1)) == "[27.9,28.1]");
}
