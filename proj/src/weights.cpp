#include "weights.hpp"

#include <sstream>

namespace flatmorse {

const char* weight_mode_name(WeightMode mode) {
  switch (mode) {
    case WeightMode::Raw: return "raw";
    case WeightMode::Classic: return "classic";
    case WeightMode::Parabolic: return "parabolic";
  }
  return "unknown";
}

WeightConfig make_config(int genus, std::vector<Rational> weights,
                         WeightMode mode) {
  if (genus < 0)
    throw Error(ErrorCode::InvalidArgument, "genus must be nonnegative");
  for (const auto& w : weights)
    if (w < Rational(0) || w > Rational(1))
      throw Error(ErrorCode::InvalidArgument,
                  "weight " + to_string(w) + " outside [0,1]");
  if (mode == WeightMode::Classic &&
      !(weights.size() == 1 && weights[0] == Rational(1)))
    throw Error(ErrorCode::InvalidArgument,
                "Classic mode requires exactly one weight equal to 1");
  if (mode == WeightMode::Parabolic)
    for (const auto& w : weights)
      if (w == Rational(0) || w == Rational(1))
        throw Error(ErrorCode::InvalidArgument,
                    "Parabolic mode requires weights strictly inside (0,1)");
  return WeightConfig{genus, std::move(weights), mode};
}

WeightConfig parse_config(int genus, const std::vector<std::string>& weights,
                          WeightMode mode) {
  std::vector<Rational> t;
  t.reserve(weights.size());
  for (const auto& s : weights) t.push_back(parse_rational(s));
  return make_config(genus, std::move(t), mode);
}

KappaValue kappa(const WeightConfig& cfg, std::uint32_t subset) {
  Rational sum(0);
  for (std::size_t j = 0; j < cfg.punctures(); ++j) {
    if (subset & (1u << j))
      sum += cfg.t[j];
    else
      sum -= cfg.t[j];
  }
  return KappaValue{sum / 2, subset};
}

BigInt floor_kappa(const KappaValue& k) { return floor_rational(k.value); }

namespace {

bool is_integer(const Rational& r) { return r.denominator() == 1; }

// Depth-first over subsets in lexicographic order of their sorted member
// lists ({} < {1} < {1,2} < {2}), so the first witness found is the least.
bool find_witness(const WeightConfig& cfg, std::size_t next,
                  std::uint32_t subset, const Rational& value,
                  std::uint32_t* witness) {
  if (is_integer(value)) {
    *witness = subset;
    return true;
  }
  for (std::size_t j = next; j < cfg.punctures(); ++j) {
    // Adding puncture j+1 moves t_{j+1} from the negative to the positive sum.
    if (find_witness(cfg, j + 1, subset | (1u << j), value + cfg.t[j],
                     witness))
      return true;
  }
  return false;
}

}  // namespace

RegularityResult is_regular(const WeightConfig& cfg) {
  if (cfg.mode == WeightMode::Raw)
    throw Error(ErrorCode::NotNormalized,
                "normalize the weight configuration first");
  if (cfg.punctures() > 30)
    throw Error(ErrorCode::SubsetOverflow,
                "subset enumeration capped at n <= 30");
  Rational empty_value(0);
  for (const auto& w : cfg.t) empty_value -= w;
  empty_value /= 2;
  std::uint32_t witness = 0;
  if (find_witness(cfg, 0, 0, empty_value, &witness))
    return RegularityResult{false, witness};
  return RegularityResult{true, 0};
}

std::vector<std::size_t> subset_members(std::uint32_t subset) {
  std::vector<std::size_t> members;
  for (std::size_t j = 0; j < 32; ++j)
    if (subset & (1u << j)) members.push_back(j + 1);
  return members;
}

std::string subset_to_string(std::uint32_t subset) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (std::size_t m : subset_members(subset)) {
    if (!first) os << ",";
    os << m;
    first = false;
  }
  os << "}";
  return os.str();
}

NormalizeResult normalize(const WeightConfig& cfg) {
  NormalizeResult result;
  if (cfg.punctures() == 1 && cfg.t[0] == Rational(1)) {
    result.config = WeightConfig{cfg.genus, cfg.t, WeightMode::Classic};
    result.transcript.push_back(
        "one puncture with t_1 = 1: kept as-is (classic mode)");
    return result;
  }
  std::vector<Rational> kept;
  int ones = 0;
  for (std::size_t j = 0; j < cfg.punctures(); ++j) {
    if (cfg.t[j] == Rational(0)) {
      result.transcript.push_back("dropped puncture " + std::to_string(j + 1) +
                                  " with t = 0");
    } else if (cfg.t[j] == Rational(1)) {
      ++ones;
      result.transcript.push_back("dropped puncture " + std::to_string(j + 1) +
                                  " with t = 1");
    } else {
      kept.push_back(cfg.t[j]);
    }
  }
  if (ones % 2 == 1) {
    if (kept.empty())
      throw Error(ErrorCode::NoInteriorWeight,
                  "odd number of weights equal to 1 and no interior weight "
                  "left to flip");
    Rational flipped = Rational(1) - kept[0];
    result.transcript.push_back("odd count of t = 1 punctures: replaced first "
                                "surviving weight " +
                                to_string(kept[0]) + " by " +
                                to_string(flipped));
    kept[0] = flipped;
  }
  result.config = WeightConfig{cfg.genus, std::move(kept),
                               WeightMode::Parabolic};
  if (result.transcript.empty())
    result.transcript.push_back("all weights already strictly inside (0,1)");
  return result;
}

}  // namespace flatmorse
