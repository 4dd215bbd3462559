#ifndef FLATMORSE_WEIGHTS_HPP
#define FLATMORSE_WEIGHTS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rational.hpp"

namespace flatmorse {

enum class WeightMode { Raw, Classic, Parabolic };

const char* weight_mode_name(WeightMode mode);

// Genus plus exact rational puncture weights t_1..t_n in [0,1].
// Classic means exactly one puncture with t_1 = 1 (holonomy -I);
// Parabolic means every weight is strictly interior.
struct WeightConfig {
  int genus = 0;
  std::vector<Rational> t;
  WeightMode mode = WeightMode::Raw;

  std::size_t punctures() const { return t.size(); }
};

// Validates ranges (0 <= t_j <= 1, genus >= 0) and throws
// Error(InvalidArgument) otherwise.
WeightConfig make_config(int genus, std::vector<Rational> weights,
                         WeightMode mode = WeightMode::Raw);

WeightConfig parse_config(int genus, const std::vector<std::string>& weights,
                          WeightMode mode = WeightMode::Raw);

struct KappaValue {
  Rational value;
  std::uint32_t subset = 0;  // bitmask over punctures, bit j-1 <-> puncture j
};

// kappa_J = (sum_{j in J} t_j - sum_{j not in J} t_j) / 2, exact.
KappaValue kappa(const WeightConfig& cfg, std::uint32_t subset);

BigInt floor_kappa(const KappaValue& k);

struct RegularityResult {
  bool regular = false;
  std::uint32_t witness = 0;  // lexicographically least J with kappa_J integral
};

// I is a critical value of mu iff kappa_J is an integer for some subset J.
// Exhaustive over all 2^n subsets; throws Error(SubsetOverflow) for n > 30
// and Error(NotNormalized) for Raw configs.
RegularityResult is_regular(const WeightConfig& cfg);

std::vector<std::size_t> subset_members(std::uint32_t subset);
std::string subset_to_string(std::uint32_t subset);

struct NormalizeResult {
  WeightConfig config;
  std::vector<std::string> transcript;
};

// Drops weights equal to 0 or 1; if an odd number of weights equal 1, the
// first surviving weight t_1 is replaced by 1 - t_1. The one-puncture
// t_1 = 1 shape is kept as-is in Classic mode. Idempotent.
NormalizeResult normalize(const WeightConfig& cfg);

}  // namespace flatmorse

#endif
