#include <doctest.h>

#include "hypbounds/bounds.hpp"
#include "hypbounds/errors.hpp"

using namespace hyp;

TEST_CASE("lower bound from a volume") {
  CHECK(lower_bound_from_volume(lobell_volume(6)) == 48);
  CHECK(lower_bound_from_volume({v3() / 2, 0.0, {}}) == 1);
  CHECK(lower_bound_from_volume({2.5 * v3(), 1e-12, {}}) == 3);
  CHECK_THROWS_AS(lower_bound_from_volume({0.0, 0.0, {}}), DomainError);
  CHECK_THROWS_AS(lower_bound_from_volume({-1.0, 0.0, {}}), DomainError);
}

TEST_CASE("lower bound never overshoots near an integer multiple of v3") {
  // vol(M(4)) equals 2 v3 exactly; only k = 2 is certified, as c·v3 > vol
  // cannot be decided numerically for c = 2.
  const auto v = fibonacci_volume(4);
  CHECK(std::abs(v.value - 2 * v3()) < 1e-12);
  CHECK(lower_bound_from_volume(v) == 2);
}

TEST_CASE("upper bound formulas") {
  CHECK(lobell_upper_formula(5) == 288);
  CHECK(lobell_upper_formula(6) == 352);
  CHECK(fibonacci_upper_formula(4) == 12);
}

TEST_CASE("classical Löbell manifold") {
  const auto r = bounds_report(Family::Lobell, 6);
  CHECK(r.upper_bound == 352);
  CHECK(r.lower_bound == 48);
  CHECK(r.asymptotic_lower == 60);
  CHECK_FALSE(r.asymptotic_reached);
  CHECK(r.volume.value == lobell_volume(6).value);
}

TEST_CASE("smallest Fibonacci manifold") {
  const auto r = bounds_report(Family::Fibonacci, 4);
  CHECK(r.upper_bound == 12);
  CHECK(r.lower_bound == 2);
  CHECK(r.asymptotic_lower == 8);
}

TEST_CASE("report invariants") {
  for (long n = 5; n <= 50; ++n) {
    const auto r = bounds_report(Family::Lobell, n);
    REQUIRE(r.volume.value < r.upper_bound * v3());
    REQUIRE(r.lower_bound <= r.upper_bound);
    REQUIRE(r.upper_bound == 32 * (2 * n - 1));
    REQUIRE(r.volume_over_upper_v3 < 1.0);
  }
  for (long n = 4; n <= 50; ++n) {
    const auto r = bounds_report(Family::Fibonacci, n);
    REQUIRE(r.volume.value < r.upper_bound * v3());
    REQUIRE(r.lower_bound <= r.upper_bound);
    REQUIRE(r.upper_bound == 3 * n);
  }
}

TEST_CASE("lower/upper approaches 10/64 and 2/3") {
  double prev = 1.0;
  for (long n : {50L, 100L, 500L}) {
    const double q = bounds_report(Family::Lobell, n).lower_over_upper;
    CHECK(q < prev);
    CHECK(std::abs(q - 10.0 / 64) < 2e-3);
    prev = q;
  }
  for (long n : {50L, 100L}) CHECK(bounds_report(Family::Fibonacci, n).lower_over_upper == doctest::Approx(2.0 / 3));
}

TEST_CASE("asymptotic lower bound at n = 100") {
  // The volumes approach 10n·v3 and 2n·v3 from below, so the certified
  // bound equals the asymptotic form here without exceeding it.
  const auto lob = bounds_report(Family::Lobell, 100);
  CHECK(lob.lower_bound == 1000);
  CHECK(lob.asymptotic_reached);
  const auto fib = bounds_report(Family::Fibonacci, 100);
  CHECK(fib.lower_bound == 200);
  CHECK(fib.asymptotic_reached);
}

TEST_CASE("JSON shape") {
  const auto doc = to_json(bounds_report(Family::Fibonacci, 5));
  CHECK(doc["family"] == "fibonacci");
  CHECK(doc["upper"] == 15);
  CHECK(doc["volume"].contains("errorBound"));
  CHECK(doc["volume"]["parameters"].contains("a_n"));
  CHECK(doc["ratios"].contains("lowerOverUpper"));
}
