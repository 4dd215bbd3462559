#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "su2.hpp"

using namespace flatmorse;

TEST_CASE("quaternion relations and matrix identification") {
  auto I = SU2Element::basis_i();
  auto J = SU2Element::basis_j();
  auto K = SU2Element::basis_k();

  CHECK(max_abs_diff(multiply(I, J), K) < 1e-15);
  CHECK(max_abs_diff(multiply(J, K), I) < 1e-15);
  CHECK(max_abs_diff(multiply(K, I), J) < 1e-15);
  CHECK(max_abs_diff(multiply(I, I), -SU2Element::identity()) < 1e-15);

  // diag(e^{i theta}, e^{-i theta}) <-> cos theta + sin theta i.
  double theta = 0.3;
  SU2Element diag{std::cos(theta), std::sin(theta), 0, 0};
  CHECK(half_trace(diag) == doctest::Approx(std::cos(theta)).epsilon(1e-15));
  CHECK(max_abs_diff(exp_algebra({theta, 0, 0}), diag) < 1e-15);
}

TEST_CASE("adjoint is an isometry and matches conjugation") {
  std::mt19937_64 rng(42);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int k = 0; k < 50; ++k) {
    SU2Element g = haar_sample(rng);
    AlgebraVector v{gauss(rng), gauss(rng), gauss(rng)};
    v = v * (1.0 / v.norm());  // multiply() renormalizes, so compare on units
    AlgebraVector w = adjoint(g, v);
    CHECK(w.norm() == doctest::Approx(v.norm()).epsilon(1e-12));
    // Against the quaternion product g v g^-1.
    SU2Element qv{0, v.x, v.y, v.z};
    SU2Element conj = multiply(multiply(g, qv), inverse(g));
    CHECK(std::abs(conj.x - w.x) < 1e-12);
    CHECK(std::abs(conj.y - w.y) < 1e-12);
    CHECK(std::abs(conj.z - w.z) < 1e-12);
  }
}

TEST_CASE("exp/log round trip on Haar samples") {
  Su2Tolerances tol;
  std::mt19937_64 rng(7);
  double worst = 0;
  for (int k = 0; k < 1000; ++k) {
    SU2Element q = haar_sample(rng);
    if (q.w < -1 + 1e-6) continue;  // principal log undefined near -I
    worst = std::max(worst, max_abs_diff(exp_algebra(log_group(q)), q));
  }
  CHECK(worst < tol.round_trip);
}

TEST_CASE("log throws at the antipode") {
  CHECK_THROWS_AS(log_group(-SU2Element::identity()), Error);
  try {
    log_group(-SU2Element::identity());
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::AntipodalLog);
  }
}

TEST_CASE("exp near zero stays accurate") {
  AlgebraVector tiny{1e-9, -2e-9, 3e-10};
  SU2Element q = exp_algebra(tiny);
  CHECK(std::abs(q.norm() - 1.0) < 1e-15);
  AlgebraVector back = log_group(q);
  CHECK(std::abs(back.x - tiny.x) < 1e-18);
  CHECK(std::abs(back.y - tiny.y) < 1e-18);
  CHECK(std::abs(back.z - tiny.z) < 1e-18);
}

TEST_CASE("haar sampling has the right first moments") {
  std::mt19937_64 rng(12345);
  const int N = 20000;
  double mean_w = 0, mean_w2 = 0;
  for (int k = 0; k < N; ++k) {
    SU2Element q = haar_sample(rng);
    mean_w += q.w;
    mean_w2 += q.w * q.w;
  }
  mean_w /= N;
  mean_w2 /= N;
  // E[w] = 0 and E[w^2] = 1/4 for the Haar measure.
  CHECK(std::abs(mean_w) < 0.02);
  CHECK(std::abs(mean_w2 - 0.25) < 0.02);
}

TEST_CASE("class elements have the prescribed half-trace") {
  std::mt19937_64 rng(3);
  Rational t(1, 3);
  for (int k = 0; k < 20; ++k) {
    SU2Element c = class_element(t, haar_sample(rng));
    CHECK(half_trace(c) ==
          doctest::Approx(std::cos(M_PI / 3.0)).epsilon(1e-12));
  }
  // The frozen classic class.
  SU2Element minus = class_element(Rational(1), haar_sample(rng));
  CHECK(max_abs_diff(minus, -SU2Element::identity()) < 1e-12);
}

TEST_CASE("commutator definition") {
  std::mt19937_64 rng(9);
  SU2Element a = haar_sample(rng), b = haar_sample(rng);
  SU2Element lhs = commutator(a, b);
  SU2Element rhs = multiply(multiply(a, b), multiply(inverse(a), inverse(b)));
  CHECK(max_abs_diff(lhs, rhs) < 1e-14);
}
