#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "weights.hpp"

using namespace flatmorse;

namespace {
Rational rat(long n, long d) { return Rational(BigInt(n), BigInt(d)); }
}

TEST_CASE("rational parsing is exact and rejects float syntax") {
  CHECK(parse_rational("1/2") == rat(1, 2));
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("10/4") == rat(5, 2));
  CHECK_THROWS_AS(parse_rational("0.5"), Error);
  CHECK_THROWS_AS(parse_rational("1e-3"), Error);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
}

TEST_CASE("floor of a rational, including negatives") {
  CHECK(floor_rational(rat(7, 2)) == 3);
  CHECK(floor_rational(rat(-1, 4)) == -1);
  CHECK(floor_rational(rat(-8, 4)) == -2);
  CHECK(floor_rational(Rational(0)) == 0);
}

TEST_CASE("config validation") {
  CHECK_THROWS_AS(make_config(-1, {}), Error);
  CHECK_THROWS_AS(make_config(1, {rat(3, 2)}), Error);
  CHECK_THROWS_AS(make_config(1, {rat(1, 2)}, WeightMode::Classic), Error);
  CHECK_THROWS_AS(make_config(1, {Rational(1)}, WeightMode::Parabolic), Error);
  CHECK_NOTHROW(make_config(2, {Rational(1)}, WeightMode::Classic));
}

TEST_CASE("kappa is the signed half-sum") {
  auto cfg = make_config(1, {rat(1, 2), rat(1, 3)}, WeightMode::Parabolic);
  CHECK(kappa(cfg, 0b00).value == rat(-5, 12));
  CHECK(kappa(cfg, 0b01).value == rat(1, 12));
  CHECK(kappa(cfg, 0b10).value == rat(-1, 12));
  CHECK(kappa(cfg, 0b11).value == rat(5, 12));
  CHECK(floor_kappa(kappa(cfg, 0b00)) == -1);
  CHECK(floor_kappa(kappa(cfg, 0b11)) == 0);
}

TEST_CASE("regularity is decided exactly") {
  // kappa_J = +-1/2 for the classic single weight 1: regular.
  CHECK(is_regular(make_config(2, {Rational(1)}, WeightMode::Classic)).regular);

  auto half = is_regular(
      make_config(0, {rat(1, 2), rat(1, 2)}, WeightMode::Parabolic));
  CHECK_FALSE(half.regular);
  CHECK(half.witness == 0b01);  // least witness is {1}, not {} or {1,2}
  CHECK(subset_to_string(half.witness) == "{1}");

  // No punctures: kappa of the empty set is 0.
  auto none = is_regular(make_config(1, {}, WeightMode::Parabolic));
  CHECK_FALSE(none.regular);
  CHECK(none.witness == 0);

  // Sum of all weights equal to 2 is caught by the full subset.
  auto two = is_regular(
      make_config(1, {rat(2, 3), rat(2, 3), rat(2, 3)}, WeightMode::Parabolic));
  CHECK_FALSE(two.regular);

  CHECK(is_regular(make_config(1, {rat(9, 10), rat(1, 10)},
                               WeightMode::Parabolic))
            .regular);
}

TEST_CASE("witness is lexicographically least") {
  // Both {1,2} and {3} are integral; {1,2} precedes {3} in the subset order.
  auto cfg = make_config(0, {rat(1, 4), rat(1, 4), rat(1, 2)},
                         WeightMode::Parabolic);
  auto r = is_regular(cfg);
  CHECK_FALSE(r.regular);
  CHECK(subset_to_string(r.witness) == "{1,2}");
}

TEST_CASE("raw configs must be normalized before regularity") {
  auto raw = make_config(1, {rat(1, 2)}, WeightMode::Raw);
  CHECK_THROWS_AS(is_regular(raw), Error);
}

TEST_CASE("normalization drops boundary weights and flips parity") {
  auto r1 = normalize(make_config(1, {rat(1, 3), Rational(1)}));
  CHECK(r1.config.mode == WeightMode::Parabolic);
  CHECK(r1.config.t == std::vector<Rational>{rat(2, 3)});

  auto r2 = normalize(make_config(2, {Rational(0), rat(1, 2)}));
  CHECK(r2.config.t == std::vector<Rational>{rat(1, 2)});

  // Two weights equal to 1 cancel; no flip.
  auto r3 = normalize(make_config(1, {Rational(1), Rational(1), rat(1, 4)}));
  CHECK(r3.config.t == std::vector<Rational>{rat(1, 4)});

  // The classic one-puncture shape survives untouched.
  auto r4 = normalize(make_config(3, {Rational(1)}));
  CHECK(r4.config.mode == WeightMode::Classic);

  // Odd number of 1s with nothing left to flip.
  CHECK_THROWS_AS(normalize(make_config(1, {Rational(1), Rational(0)})),
                  Error);
}

TEST_CASE("normalization is idempotent") {
  auto once = normalize(make_config(1, {rat(1, 10), rat(1, 10), Rational(1)}));
  CHECK(once.config.t == std::vector<Rational>({rat(9, 10), rat(1, 10)}));
  auto twice = normalize(once.config);
  CHECK(twice.config.t == once.config.t);
  CHECK(twice.config.mode == once.config.mode);
}

TEST_CASE("subset enumeration is capped") {
  std::vector<Rational> many(31, rat(1, 7));
  auto cfg = make_config(1, many, WeightMode::Parabolic);
  CHECK_THROWS_AS(is_regular(cfg), Error);
}
