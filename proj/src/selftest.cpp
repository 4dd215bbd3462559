#include "selftest.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "betti.hpp"

namespace flatmorse {

namespace {

WeightConfig classic(int g) {
  return make_config(g, {Rational(1)}, WeightMode::Classic);
}

WeightConfig parabolic(int g, std::vector<Rational> t) {
  return make_config(g, std::move(t), WeightMode::Parabolic);
}

Rational rat(long num, long den) { return Rational(BigInt(num), BigInt(den)); }

IntPolynomial poly(std::vector<long> coeffs) {
  std::vector<BigInt> c(coeffs.begin(), coeffs.end());
  return IntPolynomial(std::move(c));
}

struct Suite {
  const VerifyConfig& vc;
  SelftestReport report;

  void run(const std::string& name, const std::function<std::string()>& body) {
    SelftestCheck check;
    check.name = name;
    try {
      check.detail = body();
      check.pass = true;
    } catch (const std::exception& e) {
      check.pass = false;
      check.detail = e.what();
    }
    report.criteria.push_back(std::move(check));
  }
};

void require(bool condition, const std::string& message) {
  if (!condition) throw Error(ErrorCode::InvalidArgument, message);
}

// ---- exact criteria -------------------------------------------------------

std::string criterion_hn_values() {
  require(hn_poincare(0) == IntPolynomial::zero(), "hn(0) != 0");
  require(hn_poincare(1) == IntPolynomial::one(), "hn(1) != 1");
  IntPolynomial expected = poly({1, 0, 1, 4, 1, 0, 1});
  require(hn_poincare(2) == expected,
          "hn(2) != 1 + t^2 + 4t^3 + t^4 + t^6, got " +
              hn_poincare(2).to_text());
  return "hn(0) = 0, hn(1) = 1, hn(2) = " + hn_poincare(2).to_text();
}

std::string criterion_hn_recursion() {
  IntPolynomial f3 = poly({1, 0, 0, 1});
  IntPolynomial f1 = poly({1, 1});
  for (int g = 1; g <= 20; ++g) {
    IntPolynomial rhs =
        f3.pow(2) * hn_poincare(g - 1) +
        IntPolynomial::monomial(2 * g - 2, 1) * f1.pow(2 * g - 2);
    require(hn_poincare(g) == rhs,
            "recursion fails at g = " + std::to_string(g));
  }
  return "exact for g = 1..20";
}

std::string criterion_palindromy() {
  for (int g = 1; g <= 10; ++g)
    require(hn_poincare(g).is_palindromic(6 * g - 6),
            "classic palindromy fails at g = " + std::to_string(g));
  struct Fixed {
    WeightConfig cfg;
    BigInt expected_euler;
  };
  std::vector<Fixed> fixed = {
      {parabolic(1, {rat(1, 2)}), BigInt(2)},
      {parabolic(1, {rat(9, 10), rat(1, 10)}), BigInt(4)},
      {parabolic(2, {rat(1, 2)}), BigInt(0)},
      {parabolic(2, {rat(1, 3)}), BigInt(0)},
      {parabolic(3, {rat(1, 2)}), BigInt(0)},
  };
  BaseCaseProvider base = BaseCaseProvider::empty_asserted();
  for (const auto& fx : fixed) {
    IntPolynomial p = poincare(fx.cfg, base);
    require(p.is_palindromic(dimension(fx.cfg)),
            "parabolic palindromy fails for g = " +
                std::to_string(fx.cfg.genus));
    require(p.evaluate(BigInt(-1)) == fx.expected_euler,
            "Euler characteristic " + p.evaluate(BigInt(-1)).str() +
                " != expected " + fx.expected_euler.str());
  }
  return "classic g = 1..10 and 5 parabolic configs, chi as expected";
}

std::string criterion_parabolic_values() {
  BaseCaseProvider base = BaseCaseProvider::empty_asserted();
  require(poincare(parabolic(1, {rat(1, 2)}), base) == poly({1, 0, 1}),
          "P(g=1, t=1/2) != 1 + t^2");
  require(poincare(parabolic(1, {rat(9, 10), rat(1, 10)}), base) ==
              poly({1, 0, 2, 0, 1}),
          "P(g=1, t=(9/10,1/10)) != (1+t^2)^2");
  require(poincare(parabolic(2, {rat(1, 2)}), base) ==
              poly({1, 0, 2, 4, 2, 4, 2, 0, 1}),
          "P(g=2, t=1/2) mismatch");
  // The projective-bundle picture: (1/10, 1/10, 1) normalizes to
  // (9/10, 1/10) and the polynomial is (1+t^2)^{n-1} over a point.
  auto norm = normalize(
      make_config(1, {rat(1, 10), rat(1, 10), Rational(1)}, WeightMode::Raw));
  require(norm.config.mode == WeightMode::Parabolic &&
              norm.config.t == std::vector<Rational>({rat(9, 10), rat(1, 10)}),
          "normalize((1/10,1/10,1)) != (9/10,1/10)");
  require(poincare(norm.config, base) == poly({1, 0, 2, 0, 1}),
          "normalized config polynomial mismatch");
  return "three exact values plus the normalized bundle case";
}

std::string criterion_regularity() {
  require(is_regular(classic(2)).regular, "classic weights must be regular");
  auto half = is_regular(parabolic(0, {rat(1, 2), rat(1, 2)}));
  require(!half.regular && half.witness == 1u,
          "t = (1/2,1/2) should be irregular with witness {1}");
  auto none = is_regular(parabolic(1, {}));
  require(!none.regular && none.witness == 0u,
          "n = 0 should be irregular with witness {}");
  return "classic regular; (1/2,1/2) irregular with witness {1}; n = 0 "
         "irregular";
}

// ---- numerical criteria ---------------------------------------------------

TangentVector random_tangent(const RepTuple& p, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  TangentVector v = TangentVector::zero(p);
  for (std::size_t i = 0; i < p.A.size(); ++i) {
    v.a[i] = {gauss(rng), gauss(rng), gauss(rng)};
    v.b[i] = {gauss(rng), gauss(rng), gauss(rng)};
  }
  for (std::size_t j = 0; j < p.C.size(); ++j) {
    AlgebraVector d{gauss(rng), gauss(rng), gauss(rng)};
    v.c[j] = d - adjoint(inverse(p.C[j]), d);
  }
  return v;
}

std::string criterion_derivative(const VerifyConfig& vc) {
  std::vector<WeightConfig> cfgs = {
      parabolic(1, {rat(1, 2)}),
      parabolic(2, {rat(1, 2)}),
      parabolic(1, {rat(9, 10), rat(1, 10)}),
  };
  std::mt19937_64 rng(vc.seed + 6);
  double worst = 0;
  for (const auto& cfg : cfgs) {
    for (int k = 0; k < vc.samples; ++k) {
      RepTuple p = random_fiber_point(cfg, vc, rng);
      TangentVector v = random_tangent(p, rng);
      AlgebraVector exact = dmu_apply(p, v);
      AlgebraVector fd = dmu_finite_difference(p, v, vc.fd_step);
      double rel = (exact - fd).norm() / std::max(fd.norm(), 1e-2);
      worst = std::max(worst, rel);
      require(rel < 1e-6, "FD relative error " + std::to_string(rel));
    }
  }

  // Splitting at A_g = +-I: D mu_{g,n} = D mu_{g-1,n} + Ad(prod C)^-1 D mu_{1,0}.
  double worst_split = 0;
  for (int sign = 0; sign < 2; ++sign) {
    WeightConfig cfg = parabolic(2, {rat(1, 2)});
    RepTuple p = random_tuple(cfg, rng);
    p.A.back() = sign ? -SU2Element::identity() : SU2Element::identity();
    TangentVector v = random_tangent(p, rng);
    AlgebraVector full = dmu_apply(p, v);

    RepTuple lower = p;
    lower.A.pop_back();
    lower.B.pop_back();
    lower.cfg.genus -= 1;
    TangentVector vl = v;
    vl.a.pop_back();
    vl.b.pop_back();

    RepTuple handle;
    handle.cfg = parabolic(1, {});
    handle.A = {p.A.back()};
    handle.B = {p.B.back()};
    TangentVector vh = TangentVector::zero(handle);
    vh.a[0] = v.a.back();
    vh.b[0] = v.b.back();

    SU2Element prod_c = SU2Element::identity();
    for (const auto& c : p.C) prod_c = multiply(prod_c, c);
    AlgebraVector rhs =
        dmu_apply(lower, vl) +
        adjoint(inverse(prod_c), dmu_apply(handle, vh));
    double err = (full - rhs).norm();
    worst_split = std::max(worst_split, err);
    require(err < 1e-10, "splitting identity error " + std::to_string(err));
  }
  std::ostringstream os;
  os << "worst FD relative error " << worst << " (tol 1e-6), splitting error "
     << worst_split << " (tol 1e-10)";
  return os.str();
}

std::string criterion_regular_sampling(const VerifyConfig& vc) {
  WeightConfig cfg = classic(2);
  std::mt19937_64 rng(vc.seed + 7);
  double worst_residual = 0;
  for (int k = 0; k < vc.samples; ++k) {
    RepTuple p = solve_to_fiber(random_tuple(cfg, rng), vc);
    double residual = mu_residual(p);
    worst_residual = std::max(worst_residual, residual);
    require(residual < vc.fiber_tol, "Newton residual " +
                                         std::to_string(residual));
    require(rank_dmu(p, vc.rank_rel_threshold) == 3,
            "rank < 3 at a Newton-solved point of a regular configuration");
  }

  // Commuting-diagonal witnesses for irregular configurations.
  RepTuple diag0;
  diag0.cfg = parabolic(0, {rat(1, 2), rat(1, 2)});
  diag0.C = {SU2Element::basis_i(), inverse(SU2Element::basis_i())};
  require(rank_dmu(diag0, vc.rank_rel_threshold) <= 2,
          "commuting g = 0 tuple should have rank <= 2");

  RepTuple diag1;
  diag1.cfg = parabolic(1, {rat(1, 3)});
  diag1.A = {exp_algebra({0.3, 0, 0})};
  diag1.B = {exp_algebra({0.7, 0, 0})};
  diag1.C = {class_element(rat(1, 3), SU2Element::identity())};
  require(rank_dmu(diag1, vc.rank_rel_threshold) <= 2,
          "commuting g = 1 tuple should have rank <= 2");

  std::ostringstream os;
  os << vc.samples << "/" << vc.samples << " solves converged, worst residual "
     << worst_residual << " (tol " << vc.fiber_tol
     << "); irregular witnesses have rank <= 2";
  return os.str();
}

std::string criterion_critical_suite(const VerifyConfig& vc) {
  std::vector<WeightConfig> cfgs = {
      parabolic(1, {rat(1, 2)}),
      parabolic(1, {rat(9, 10), rat(1, 10)}),
      parabolic(2, {rat(1, 2)}),
  };
  std::ostringstream os;
  for (const auto& cfg : cfgs) {
    TorusCensusResult census = torus_census(cfg, vc);
    for (const auto& entry : census.classes)
      require(entry.hessian.nullity == 2 * cfg.genus - 2,
              "nullity " + std::to_string(entry.hessian.nullity) +
                  " != 2g-2 in the census");
    os << "g=" << cfg.genus << " n=" << cfg.punctures() << ": "
       << census.classes.size() << " classes, indices";
    for (int i : census.measured_indices) os << " " << i;
    os << "; ";
  }

  RepTuple s2 = critical_tuple(classic(2), 0, 0);
  require(mu_residual(s2) < vc.critical_residual_tol,
          "classic S2 tuple residual too large");
  require(std::abs(half_trace(s2.A.back())) < 1e-12,
          "classic S2 tuple should have f = 0");
  HessianReport h = hessian_index(s2, vc);
  require(h.index == 2 && h.nullity == 2,
          "classic g=2 S2 tuple: index " + std::to_string(h.index) +
              ", nullity " + std::to_string(h.nullity) + ", expected 2, 2");
  os << "classic g=2 S2: index 2, nullity 2 (residual tol "
     << vc.critical_residual_tol << ")";
  return os.str();
}

std::string criterion_symmetries(const VerifyConfig& vc) {
  WeightConfig cfg = classic(2);
  std::mt19937_64 rng(vc.seed + 9);
  double worst_f = 0, worst_mu = 0;
  for (int k = 0; k < vc.samples; ++k) {
    RepTuple p = random_fiber_point(cfg, vc, rng);
    if (std::abs(half_trace(p.A.back())) > 1 - 1e-9) {
      --k;
      continue;
    }
    double f = half_trace(p.A.back());
    SU2Element mu = mu_eval(p);

    RepTuple rotated = u1_action(p, 1.2345);
    RepTuple twisted = half_twist(p);
    std::vector<int> delta(p.A.size(), 0), eps(p.A.size(), 0);
    delta.back() = 1;
    RepTuple flipped = sign_action(delta, eps, p);

    worst_f = std::max(worst_f, std::abs(half_trace(rotated.A.back()) - f));
    worst_f = std::max(worst_f, std::abs(half_trace(twisted.A.back()) - f));
    worst_f = std::max(worst_f, std::abs(half_trace(flipped.A.back()) + f));
    worst_mu = std::max(worst_mu, max_abs_diff(mu_eval(rotated), mu));
    worst_mu = std::max(worst_mu, max_abs_diff(mu_eval(twisted), mu));
    worst_mu = std::max(worst_mu, max_abs_diff(mu_eval(flipped), mu));
  }
  require(worst_f < 1e-12, "f-invariance error " + std::to_string(worst_f));
  require(worst_mu < 1e-12, "mu-invariance error " + std::to_string(worst_mu));
  std::ostringstream os;
  os << vc.samples << " fiber points: worst f deviation " << worst_f
     << ", worst mu deviation " << worst_mu << " (tol 1e-12)";
  return os.str();
}

std::string criterion_u2(const VerifyConfig&) {
  BaseCaseProvider base = BaseCaseProvider::empty_asserted();
  std::vector<WeightConfig> cfgs = {
      parabolic(1, {rat(1, 2)}),
      parabolic(1, {rat(9, 10), rat(1, 10)}),
      parabolic(2, {rat(1, 2)}),
  };
  IntPolynomial f1 = poly({1, 1});
  for (const auto& cfg : cfgs)
    require(u2_poincare(cfg, base) ==
                f1.pow(2 * cfg.genus) * poincare(cfg, base),
            "U(2) polynomial mismatch at g = " + std::to_string(cfg.genus));
  return "u2 = (1+t)^{2g} * poincare, exact for all three configs";
}

}  // namespace

SelftestReport run_selftest(const VerifyConfig& vc) {
  Suite suite{vc, {}};
  suite.report.seed = vc.seed;
  suite.run("1_harder_narasimhan_values", criterion_hn_values);
  suite.run("2_genus_recursion", criterion_hn_recursion);
  suite.run("3_palindromy_and_euler", criterion_palindromy);
  suite.run("4_parabolic_values", criterion_parabolic_values);
  suite.run("5_regularity", criterion_regularity);
  suite.run("6_derivative_vs_finite_differences",
            [&] { return criterion_derivative(vc); });
  suite.run("7_regular_value_sampling",
            [&] { return criterion_regular_sampling(vc); });
  suite.run("8_critical_point_suite",
            [&] { return criterion_critical_suite(vc); });
  suite.run("9_symmetry_suite", [&] { return criterion_symmetries(vc); });
  suite.run("10_u2_extension", [&] { return criterion_u2(vc); });
  suite.report.all_pass = true;
  for (const auto& c : suite.report.criteria)
    suite.report.all_pass &= c.pass;
  return suite.report;
}

}  // namespace flatmorse
