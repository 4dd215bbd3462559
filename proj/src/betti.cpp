#include "betti.hpp"

namespace flatmorse {

namespace {

IntPolynomial one_plus_t() {
  return IntPolynomial({BigInt(1), BigInt(1)});
}

IntPolynomial one_plus_t3() {
  return IntPolynomial({BigInt(1), BigInt(0), BigInt(0), BigInt(1)});
}

IntPolynomial t_plus_t2() {
  return IntPolynomial({BigInt(0), BigInt(1), BigInt(1)});
}

// (1-t^2)(1-t^4)
IntPolynomial hn_denominator() {
  return IntPolynomial({BigInt(1), BigInt(0), BigInt(-1)}) *
         IntPolynomial({BigInt(1), BigInt(0), BigInt(0), BigInt(0), BigInt(-1)});
}

void require_regular(const WeightConfig& cfg) {
  auto reg = is_regular(cfg);
  if (!reg.regular)
    throw Error(ErrorCode::IrregularWeights,
                "irregular weights: kappa_J is an integer for J = " +
                    subset_to_string(reg.witness));
}

// P_t(M_{0,n}) for the configuration's weights, from the provider.
IntPolynomial base_value(const WeightConfig& cfg,
                         const BaseCaseProvider& base) {
  if (base.kind == BaseCaseProvider::Kind::UserSupplied) {
    if (base.poly.has_negative_coefficient())
      throw Error(ErrorCode::InvalidArgument,
                  "user-supplied base polynomial has a negative coefficient");
    return base.poly;
  }
  if (base.probe) {
    WeightConfig g0{0, cfg.t, cfg.mode};
    if (base.probe(g0))
      throw Error(ErrorCode::UnresolvedBaseCase,
                  "base case asserted empty, but the numeric probe found a "
                  "point of M_{0,n}");
  }
  return IntPolynomial::zero();
}

IntPolynomial poincare_impl(const WeightConfig& cfg,
                            const BaseCaseProvider& base) {
  if (cfg.genus == 0) {
    if (cfg.mode == WeightMode::Classic) return IntPolynomial::zero();
    return base_value(cfg, base);
  }
  WeightConfig lower{cfg.genus - 1, cfg.t, cfg.mode};
  IntPolynomial ends = one_plus_t3().pow(2) * poincare_impl(lower, base);
  int g = cfg.genus;
  IntPolynomial tori;
  if (cfg.mode == WeightMode::Classic) {
    tori = IntPolynomial::monomial(2 * g - 2, 1) * one_plus_t().pow(2 * g - 2);
  } else {
    IntPolynomial sum;
    std::uint32_t count = 1u << cfg.punctures();
    for (std::uint32_t J = 0; J < count; ++J)
      sum = sum + IntPolynomial::monomial(torus_index(cfg, J), 1);
    tori = one_plus_t().pow(2 * g - 2) * sum;
  }
  return ends + tori;
}

}  // namespace

BaseCaseProvider BaseCaseProvider::user_supplied(IntPolynomial p) {
  BaseCaseProvider b;
  b.kind = Kind::UserSupplied;
  b.poly = std::move(p);
  return b;
}

const char* stratum_kind_name(StratumKind kind) {
  switch (kind) {
    case StratumKind::EndMin: return "end_min";
    case StratumKind::EndMax: return "end_max";
    case StratumKind::InteriorTorus: return "interior_torus";
  }
  return "unknown";
}

IntPolynomial hn_poincare(int genus) {
  if (genus < 0)
    throw Error(ErrorCode::InvalidArgument, "genus must be nonnegative");
  unsigned g2 = static_cast<unsigned>(2 * genus);
  IntPolynomial numerator =
      one_plus_t3().pow(g2) -
      IntPolynomial::monomial(2 * genus, 1) * one_plus_t().pow(g2);
  return numerator.divide_exact(hn_denominator());
}

int torus_index(const WeightConfig& cfg, std::uint32_t subset) {
  KappaValue k = kappa(cfg, subset);
  BigInt fl = floor_kappa(k);
  int popcount = static_cast<int>(subset_members(subset).size());
  BigInt index = 2 * cfg.genus + 2 * static_cast<int>(cfg.punctures()) -
                 2 * popcount + 4 * fl;
  return index.convert_to<int>();
}

int dimension(const WeightConfig& cfg) {
  if (cfg.mode == WeightMode::Raw)
    throw Error(ErrorCode::NotNormalized, "dimension requires a normalized "
                                          "configuration");
  if (cfg.mode == WeightMode::Classic) return 6 * cfg.genus - 6;
  return 6 * cfg.genus - 6 + 2 * static_cast<int>(cfg.punctures());
}

std::vector<CriticalStratum> strata(const WeightConfig& cfg,
                                    const BaseCaseProvider& base) {
  require_regular(cfg);
  if (cfg.genus < 1)
    throw Error(ErrorCode::GenusZero,
                "no Morse function without a handle (genus >= 1 required)");
  int g = cfg.genus;
  std::vector<CriticalStratum> result;

  WeightConfig lower{g - 1, cfg.t, cfg.mode};
  IntPolynomial lower_poincare = poincare_impl(lower, base);
  IntPolynomial end_poincare = one_plus_t3() * lower_poincare;
  if (!end_poincare.is_zero()) {
    int end_dim = (cfg.mode == WeightMode::Classic
                       ? 6 * (g - 1) - 6
                       : 6 * (g - 1) - 6 + 2 * static_cast<int>(cfg.punctures())) +
                  3;  // SU(2)-bundle over M_{g-1,n}
    result.push_back({StratumKind::EndMin, 0, 0, end_poincare, end_dim});
    result.push_back({StratumKind::EndMax, 0, 3, end_poincare, end_dim});
  }

  IntPolynomial torus_poincare = one_plus_t().pow(2 * g - 2);
  if (cfg.mode == WeightMode::Classic) {
    result.push_back(
        {StratumKind::InteriorTorus, 0, 2 * g - 2, torus_poincare, 2 * g - 2});
  } else {
    std::uint32_t count = 1u << cfg.punctures();
    for (std::uint32_t J = 0; J < count; ++J)
      result.push_back({StratumKind::InteriorTorus, J, torus_index(cfg, J),
                        torus_poincare, 2 * g - 2});
  }
  return result;
}

IntPolynomial poincare(const WeightConfig& cfg, const BaseCaseProvider& base) {
  require_regular(cfg);
  IntPolynomial p = poincare_impl(cfg, base);
  if (p.has_negative_coefficient())
    throw Error(ErrorCode::InexactDivision,
                "Morse polynomial with a negative coefficient; arithmetic bug");
  return p;
}

std::pair<IntPolynomial, IntPolynomial> symbolic_poincare(
    const WeightConfig& cfg) {
  require_regular(cfg);
  if (cfg.mode != WeightMode::Parabolic)
    throw Error(ErrorCode::InvalidArgument,
                "symbolic form is defined for parabolic configurations");
  unsigned g2 = static_cast<unsigned>(2 * cfg.genus);
  IntPolynomial coeff = one_plus_t3().pow(g2);
  IntPolynomial quotient =
      (coeff - t_plus_t2().pow(g2)).divide_exact(hn_denominator());
  IntPolynomial sum;
  int n = static_cast<int>(cfg.punctures());
  std::uint32_t count = 1u << cfg.punctures();
  for (std::uint32_t J = 0; J < count; ++J) {
    KappaValue k = kappa(cfg, J);
    int popcount = static_cast<int>(subset_members(J).size());
    BigInt e = 2 * (n + 1 - popcount + 2 * floor_kappa(k));
    sum = sum + IntPolynomial::monomial(e.convert_to<int>(), 1);
  }
  return {coeff, quotient * sum};
}

IntPolynomial u2_poincare(const WeightConfig& cfg,
                          const BaseCaseProvider& base) {
  return one_plus_t().pow(static_cast<unsigned>(2 * cfg.genus)) *
         poincare(cfg, base);
}

ConsistencyReport consistency_report(const WeightConfig& cfg,
                                     const BaseCaseProvider& base) {
  ConsistencyReport report;
  IntPolynomial p = poincare(cfg, base);
  std::vector<CriticalStratum> st = strata(cfg, base);
  int dim = dimension(cfg);

  report.checks.push_back({"nonnegative_coefficients",
                           !p.has_negative_coefficient(), p.to_text()});

  bool palin = p.is_zero() || p.is_palindromic(dim);
  report.checks.push_back(
      {"poincare_duality", palin,
       "t^" + std::to_string(dim) + " P(1/t) = P(t)"});

  report.euler = p.evaluate(BigInt(-1));
  bool ends_empty = true;
  std::size_t tori = 0;
  for (const auto& s : st) {
    if (s.kind != StratumKind::InteriorTorus)
      ends_empty = false;
    else
      ++tori;
  }
  if (cfg.genus >= 2) {
    report.checks.push_back({"euler_characteristic", report.euler == 0,
                             "chi = " + report.euler.str() + ", expected 0"});
  } else if (ends_empty) {
    BigInt expected(tori);
    report.checks.push_back(
        {"euler_characteristic", report.euler == expected,
         "chi = " + report.euler.str() + ", expected " + expected.str()});
  } else {
    report.checks.push_back(
        {"euler_characteristic", true,
         "chi = " + report.euler.str() + " (no expectation at g = 1 with "
         "nonempty ends)"});
  }

  bool bounds = true;
  for (const auto& s : st)
    if (s.index + s.dim > dim) bounds = false;
  report.checks.push_back({"index_plus_dim_bound", bounds,
                           "max stratum index + dim <= " +
                               std::to_string(dim)});

  report.all_pass = true;
  for (const auto& c : report.checks) report.all_pass &= c.pass;
  return report;
}

}  // namespace flatmorse
