#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "betti.hpp"

using namespace flatmorse;

namespace {

Rational rat(long n, long d) { return Rational(BigInt(n), BigInt(d)); }

IntPolynomial poly(std::vector<long> coeffs) {
  std::vector<BigInt> c(coeffs.begin(), coeffs.end());
  return IntPolynomial(std::move(c));
}

WeightConfig classic(int g) {
  return make_config(g, {Rational(1)}, WeightMode::Classic);
}

WeightConfig parabolic(int g, std::vector<Rational> t) {
  return make_config(g, std::move(t), WeightMode::Parabolic);
}

const BaseCaseProvider kEmpty = BaseCaseProvider::empty_asserted();

}  // namespace

TEST_CASE("polynomial arithmetic and exact division") {
  IntPolynomial a = poly({1, 2, 1});              // (1+t)^2
  CHECK(poly({1, 1}).pow(2) == a);
  CHECK(a.divide_exact(poly({1, 1})) == poly({1, 1}));
  CHECK_THROWS_AS(a.divide_exact(poly({1, 0, 0, 1})), Error);
  CHECK(poly({1, 0, -1}).evaluate(BigInt(3)) == -8);
  CHECK(poly({0, 1, 1}).to_text() == "t + t^2");
  CHECK(poly({1, -2, 1}).to_text() == "1 - 2t + t^2");
  CHECK(IntPolynomial::zero().to_text() == "0");
  CHECK(poly({1, 0, 3}).is_palindromic(2) == false);
  CHECK(poly({1, 4, 1}).is_palindromic(2));
}

TEST_CASE("unpunctured Poincare polynomials") {
  CHECK(hn_poincare(0) == IntPolynomial::zero());
  CHECK(hn_poincare(1) == IntPolynomial::one());
  CHECK(hn_poincare(2) == poly({1, 0, 1, 4, 1, 0, 1}));
  CHECK(hn_poincare(3).degree() == 12);
  CHECK(hn_poincare(3).evaluate(BigInt(1)) ==
        hn_poincare(3).reversed(12).evaluate(BigInt(1)));
  CHECK_THROWS_AS(hn_poincare(-1), Error);
}

TEST_CASE("torus indices from the floor of kappa") {
  auto cfg = parabolic(1, {rat(1, 2)});
  // J = {}: kappa = -1/4, floor -1, index 2+2-0-4 = 0.
  CHECK(torus_index(cfg, 0b0) == 0);
  // J = {1}: kappa = 1/4, floor 0, index 2+2-2 = 2.
  CHECK(torus_index(cfg, 0b1) == 2);

  auto two = parabolic(1, {rat(9, 10), rat(1, 10)});
  CHECK(torus_index(two, 0b00) == 2);
  CHECK(torus_index(two, 0b01) == 4);
  CHECK(torus_index(two, 0b10) == 0);
  CHECK(torus_index(two, 0b11) == 2);
}

TEST_CASE("dimension by mode") {
  CHECK(dimension(classic(2)) == 6);
  CHECK(dimension(parabolic(2, {rat(1, 2)})) == 8);
  CHECK(dimension(parabolic(1, {rat(1, 3), rat(1, 3)})) == 4);
  CHECK_THROWS_AS(dimension(make_config(1, {rat(1, 2)})), Error);
}

TEST_CASE("strata of the classic genus-2 space") {
  auto st = strata(classic(2), kEmpty);
  // Two ends (the genus-1 space is a point, so (1+t^3) each) and one torus.
  REQUIRE(st.size() == 3);
  CHECK(st[0].kind == StratumKind::EndMin);
  CHECK(st[0].index == 0);
  CHECK(st[0].poincare == poly({1, 0, 0, 1}));
  CHECK(st[1].kind == StratumKind::EndMax);
  CHECK(st[1].index == 3);
  CHECK(st[2].kind == StratumKind::InteriorTorus);
  CHECK(st[2].index == 2);
  CHECK(st[2].dim == 2);
  CHECK(st[2].poincare == poly({1, 2, 1}));
}

TEST_CASE("ends are omitted when the lower space is empty") {
  // g = 1 parabolic with the base case asserted empty: tori only.
  auto st = strata(parabolic(1, {rat(1, 2)}), kEmpty);
  REQUIRE(st.size() == 2);
  CHECK(st[0].kind == StratumKind::InteriorTorus);
  CHECK(st[1].kind == StratumKind::InteriorTorus);
}

TEST_CASE("strata rejections") {
  CHECK_THROWS_AS(strata(parabolic(0, {rat(1, 2)}), kEmpty), Error);
  CHECK_THROWS_AS(strata(parabolic(1, {rat(1, 2), rat(1, 2)}), kEmpty),
                  Error);
  try {
    strata(parabolic(1, {rat(1, 2), rat(1, 2)}), kEmpty);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IrregularWeights);
  }
}

TEST_CASE("Morse polynomial values") {
  CHECK(poincare(classic(2), kEmpty) == hn_poincare(2));
  CHECK(poincare(classic(5), kEmpty) == hn_poincare(5));
  CHECK(poincare(parabolic(1, {rat(1, 2)}), kEmpty) == poly({1, 0, 1}));
  CHECK(poincare(parabolic(1, {rat(9, 10), rat(1, 10)}), kEmpty) ==
        poly({1, 0, 2, 0, 1}));
  CHECK(poincare(parabolic(2, {rat(1, 2)}), kEmpty) ==
        poly({1, 0, 2, 4, 2, 4, 2, 0, 1}));
}

TEST_CASE("user-supplied base case shifts the answer") {
  // Pretend the genus-0 space were a point.
  auto base = BaseCaseProvider::user_supplied(IntPolynomial::one());
  auto cfg = parabolic(1, {rat(1, 2)});
  CHECK(poincare(cfg, base) ==
        poly({1, 0, 1}) + poly({1, 0, 0, 1}).pow(2));
  CHECK_THROWS_AS(
      poincare(cfg, BaseCaseProvider::user_supplied(poly({1, -1}))), Error);
}

TEST_CASE("probe cross-check can veto an asserted-empty base") {
  BaseCaseProvider base = BaseCaseProvider::empty_asserted();
  base.probe = [](const WeightConfig&) { return true; };
  CHECK_THROWS_AS(poincare(parabolic(1, {rat(1, 2)}), base), Error);
  base.probe = [](const WeightConfig&) { return false; };
  CHECK_NOTHROW(poincare(parabolic(1, {rat(1, 2)}), base));
}

TEST_CASE("symbolic form matches the recursive computation") {
  for (auto cfg : {parabolic(1, {rat(1, 2)}), parabolic(2, {rat(1, 3)}),
                   parabolic(2, {rat(9, 10), rat(1, 10)})}) {
    auto [coeff, remainder] = symbolic_poincare(cfg);
    // With an empty base the polynomial is just the remainder term.
    CHECK(poincare(cfg, kEmpty) == remainder);
    // With base P0 it is coeff * P0 + remainder.
    auto p0 = poly({1, 3, 1});
    CHECK(poincare(cfg, BaseCaseProvider::user_supplied(p0)) ==
          coeff * p0 + remainder);
  }
  CHECK_THROWS_AS(symbolic_poincare(classic(2)), Error);
}

TEST_CASE("U(2) extension multiplies by (1+t)^{2g}") {
  auto cfg = parabolic(2, {rat(1, 2)});
  CHECK(u2_poincare(cfg, kEmpty) ==
        poly({1, 1}).pow(4) * poincare(cfg, kEmpty));
}

TEST_CASE("consistency report on good and bad inputs") {
  auto good = consistency_report(parabolic(2, {rat(1, 2)}), kEmpty);
  CHECK(good.all_pass);
  CHECK(good.euler == 0);

  auto g1 = consistency_report(parabolic(1, {rat(9, 10), rat(1, 10)}), kEmpty);
  CHECK(g1.all_pass);
  CHECK(g1.euler == 4);  // 2^n interior tori, no ends

  auto cls = consistency_report(classic(1), kEmpty);
  CHECK(cls.all_pass);
  CHECK(cls.euler == 1);  // single interior torus
}
