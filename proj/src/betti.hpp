#ifndef FLATMORSE_BETTI_HPP
#define FLATMORSE_BETTI_HPP

#include <functional>
#include <utility>

#include "polynomial.hpp"
#include "weights.hpp"

namespace flatmorse {

// P_t(M_g) = ((1+t^3)^{2g} - t^{2g}(1+t)^{2g}) / ((1-t^2)(1-t^4)).
// The division is asserted exact; a nonzero remainder is an arithmetic bug.
IntPolynomial hn_poincare(int genus);

enum class StratumKind { EndMin, EndMax, InteriorTorus };

const char* stratum_kind_name(StratumKind kind);

struct CriticalStratum {
  StratumKind kind = StratumKind::InteriorTorus;
  std::uint32_t subset = 0;  // defining J, interior tori only
  int index = 0;             // Morse index
  IntPolynomial poincare;    // of the stratum itself
  int dim = 0;
};

// Poincare polynomial of M_{0,n}. The genus-0 base case depends on the
// weight chamber and is not computed here, so the value is pluggable:
// either asserted empty (zero polynomial, optionally cross-checked by a
// numeric nonemptiness probe) or supplied by the caller.
struct BaseCaseProvider {
  enum class Kind { EmptyAsserted, UserSupplied };
  Kind kind = Kind::EmptyAsserted;
  IntPolynomial poly;  // UserSupplied only; nonnegative coefficients
  // Optional probe: returns true if a point of M_{0,n} was found for the
  // given genus-0 configuration. Used to cross-check EmptyAsserted.
  std::function<bool(const WeightConfig&)> probe;

  static BaseCaseProvider empty_asserted() { return BaseCaseProvider{}; }
  static BaseCaseProvider user_supplied(IntPolynomial p);
};

// Morse index of the interior torus labeled J: 2g + 2n - 2|J| + 4*floor(kappa_J).
int torus_index(const WeightConfig& cfg, std::uint32_t subset);

// 6g-6 (classic) or 6g-6+2n (parabolic).
int dimension(const WeightConfig& cfg);

// Critical strata of f for a regular configuration with g >= 1: two end
// strata (omitted when empty) plus the interior tori (2^n of them in
// parabolic mode, a single one of index 2g-2 in classic mode).
std::vector<CriticalStratum> strata(const WeightConfig& cfg,
                                    const BaseCaseProvider& base);

// Morse polynomial sum over strata of t^{index} P_t(stratum); equals the
// Poincare polynomial since the Morse function is perfect.
IntPolynomial poincare(const WeightConfig& cfg, const BaseCaseProvider& base);

// Closed form relative to the unknown base polynomial P0 = P_t(M_{0,n}):
// returns (coefficient of P0, explicit remainder term).
std::pair<IntPolynomial, IntPolynomial> symbolic_poincare(
    const WeightConfig& cfg);

// U(2) moduli space: (1+t)^{2g} * poincare(cfg).
IntPolynomial u2_poincare(const WeightConfig& cfg,
                          const BaseCaseProvider& base);

struct ConsistencyCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ConsistencyReport {
  std::vector<ConsistencyCheck> checks;
  BigInt euler = 0;  // P(-1)
  bool all_pass = false;
};

// Compact-manifold sanity checks on the computed polynomial: nonnegative
// coefficients, Poincare duality (palindromy), Euler characteristic, and
// index + stratum dimension bounded by dim M.
ConsistencyReport consistency_report(const WeightConfig& cfg,
                                     const BaseCaseProvider& base);

}  // namespace flatmorse

#endif
