#include "flatmorse.h"

#include <json.hpp>
#include <cstring>
#include <sstream>
#include <string>

#include "betti.hpp"
#include "selftest.hpp"
#include "verify.hpp"

using nlohmann::json;
namespace fm = flatmorse;

struct fm_weights {
  fm::WeightConfig cfg;
};

struct fm_poly {
  fm::IntPolynomial poly;
};

namespace {

thread_local std::string g_last_error;

fm_status map_code(fm::ErrorCode code) {
  switch (code) {
    case fm::ErrorCode::Parse: return FM_ERR_PARSE;
    case fm::ErrorCode::InvalidArgument: return FM_ERR_INVALID_ARGUMENT;
    case fm::ErrorCode::NotNormalized: return FM_ERR_NOT_NORMALIZED;
    case fm::ErrorCode::SubsetOverflow: return FM_ERR_SUBSET_OVERFLOW;
    case fm::ErrorCode::NoInteriorWeight: return FM_ERR_NO_INTERIOR_WEIGHT;
    case fm::ErrorCode::IrregularWeights: return FM_ERR_IRREGULAR_WEIGHTS;
    case fm::ErrorCode::GenusZero: return FM_ERR_GENUS_ZERO;
    case fm::ErrorCode::InexactDivision: return FM_ERR_INEXACT_DIVISION;
    case fm::ErrorCode::UnresolvedBaseCase: return FM_ERR_UNRESOLVED_BASE_CASE;
    case fm::ErrorCode::AntipodalLog: return FM_ERR_ANTIPODAL_LOG;
    case fm::ErrorCode::NoConvergence: return FM_ERR_NO_CONVERGENCE;
    case fm::ErrorCode::SliceDimensionMismatch: return FM_ERR_SLICE_DIMENSION;
    case fm::ErrorCode::DegenerateHessian: return FM_ERR_DEGENERATE_HESSIAN;
    case fm::ErrorCode::CensusMismatch: return FM_ERR_CENSUS_MISMATCH;
    case fm::ErrorCode::ActionUndefined: return FM_ERR_ACTION_UNDEFINED;
  }
  return FM_ERR_INTERNAL;
}

template <typename Fn>
fm_status guarded(Fn&& fn) {
  try {
    fn();
    return FM_OK;
  } catch (const fm::Error& e) {
    g_last_error = e.what();
    return map_code(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return FM_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::vector<std::string> split_commas(const char* s) {
  std::vector<std::string> parts;
  if (!s || !*s) return parts;
  std::istringstream is(s);
  std::string item;
  while (std::getline(is, item, ',')) parts.push_back(item);
  return parts;
}

fm::WeightMode parse_mode(const char* mode) {
  std::string m = mode ? mode : "";
  if (m == "raw") return fm::WeightMode::Raw;
  if (m == "classic") return fm::WeightMode::Classic;
  if (m == "parabolic") return fm::WeightMode::Parabolic;
  throw fm::Error(fm::ErrorCode::Parse,
                  "mode must be raw, classic or parabolic, got '" + m + "'");
}

fm::BaseCaseProvider make_base(const char* base_poly) {
  if (!base_poly) return fm::BaseCaseProvider::empty_asserted();
  std::vector<fm::BigInt> coeffs;
  for (const auto& part : split_commas(base_poly)) {
    try {
      coeffs.emplace_back(part);
    } catch (const std::exception&) {
      throw fm::Error(fm::ErrorCode::Parse,
                      "bad base polynomial coefficient '" + part + "'");
    }
  }
  return fm::BaseCaseProvider::user_supplied(
      fm::IntPolynomial(std::move(coeffs)));
}

json poly_json(const fm::IntPolynomial& p) {
  return json(p.to_decimal_strings());
}

fm::VerifyConfig to_config(const fm_verify_options* opts) {
  fm::VerifyConfig vc;
  if (!opts) return vc;
  vc.seed = opts->seed;
  vc.samples = opts->samples;
  vc.max_iterations = opts->max_iterations;
  vc.probe_starts = opts->probe_starts;
  vc.fiber_tol = opts->fiber_tol;
  vc.critical_residual_tol = opts->critical_residual_tol;
  vc.fd_step = opts->fd_step;
  vc.hessian_step = opts->hessian_step;
  vc.eig_rel_threshold = opts->eig_rel_threshold;
  return vc;
}

const fm::WeightConfig& cfg_of(const fm_weights* w) {
  if (!w)
    throw fm::Error(fm::ErrorCode::InvalidArgument, "null weights handle");
  return w->cfg;
}

void require_out(const void* out) {
  if (!out)
    throw fm::Error(fm::ErrorCode::InvalidArgument, "null output pointer");
}

}  // namespace

extern "C" {

const char* fm_status_name(fm_status status) {
  switch (status) {
    case FM_OK: return "ok";
    case FM_ERR_PARSE: return "parse";
    case FM_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case FM_ERR_NOT_NORMALIZED: return "not_normalized";
    case FM_ERR_SUBSET_OVERFLOW: return "subset_overflow";
    case FM_ERR_NO_INTERIOR_WEIGHT: return "no_interior_weight";
    case FM_ERR_IRREGULAR_WEIGHTS: return "irregular_weights";
    case FM_ERR_GENUS_ZERO: return "genus_zero";
    case FM_ERR_INEXACT_DIVISION: return "inexact_division";
    case FM_ERR_UNRESOLVED_BASE_CASE: return "unresolved_base_case";
    case FM_ERR_ANTIPODAL_LOG: return "antipodal_log";
    case FM_ERR_NO_CONVERGENCE: return "no_convergence";
    case FM_ERR_SLICE_DIMENSION: return "slice_dimension";
    case FM_ERR_DEGENERATE_HESSIAN: return "degenerate_hessian";
    case FM_ERR_CENSUS_MISMATCH: return "census_mismatch";
    case FM_ERR_ACTION_UNDEFINED: return "action_undefined";
    case FM_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* fm_last_error(void) { return g_last_error.c_str(); }

void fm_string_free(char* s) { delete[] s; }

fm_status fm_weights_parse(int genus, const char* weights, const char* mode,
                           fm_weights** out) {
  return guarded([&] {
    require_out(out);
    fm::WeightConfig cfg =
        fm::parse_config(genus, split_commas(weights), parse_mode(mode));
    *out = new fm_weights{std::move(cfg)};
  });
}

fm_status fm_weights_normalize(const fm_weights* in, fm_weights** out,
                               char** transcript_json) {
  return guarded([&] {
    require_out(out);
    fm::NormalizeResult result = fm::normalize(cfg_of(in));
    *out = new fm_weights{std::move(result.config)};
    if (transcript_json)
      *transcript_json = dup_string(json(result.transcript).dump());
  });
}

fm_status fm_weights_is_regular(const fm_weights* w, int* regular,
                                char** witness) {
  return guarded([&] {
    require_out(regular);
    fm::RegularityResult r = fm::is_regular(cfg_of(w));
    *regular = r.regular ? 1 : 0;
    if (witness)
      *witness =
          r.regular ? nullptr : dup_string(fm::subset_to_string(r.witness));
  });
}

fm_status fm_weights_dimension(const fm_weights* w, int* dim) {
  return guarded([&] {
    require_out(dim);
    *dim = fm::dimension(cfg_of(w));
  });
}

void fm_weights_free(fm_weights* w) { delete w; }

fm_status fm_hn_poincare(int genus, fm_poly** out) {
  return guarded([&] {
    require_out(out);
    *out = new fm_poly{fm::hn_poincare(genus)};
  });
}

fm_status fm_poincare(const fm_weights* w, const char* base_poly,
                      fm_poly** out) {
  return guarded([&] {
    require_out(out);
    *out = new fm_poly{fm::poincare(cfg_of(w), make_base(base_poly))};
  });
}

fm_status fm_u2_poincare(const fm_weights* w, const char* base_poly,
                         fm_poly** out) {
  return guarded([&] {
    require_out(out);
    *out = new fm_poly{fm::u2_poincare(cfg_of(w), make_base(base_poly))};
  });
}

fm_status fm_symbolic_poincare(const fm_weights* w, char** out_json) {
  return guarded([&] {
    require_out(out_json);
    auto [coeff, remainder] = fm::symbolic_poincare(cfg_of(w));
    json j;
    j["schema"] = 1;
    j["coefficient_of_base"] = poly_json(coeff);
    j["remainder"] = poly_json(remainder);
    *out_json = dup_string(j.dump());
  });
}

fm_status fm_strata_json(const fm_weights* w, const char* base_poly,
                         char** out_json) {
  return guarded([&] {
    require_out(out_json);
    json j;
    j["schema"] = 1;
    j["dimension"] = fm::dimension(cfg_of(w));
    json list = json::array();
    for (const auto& s : fm::strata(cfg_of(w), make_base(base_poly))) {
      json entry;
      entry["kind"] = fm::stratum_kind_name(s.kind);
      if (s.kind == fm::StratumKind::InteriorTorus)
        entry["subset"] = fm::subset_to_string(s.subset);
      entry["index"] = s.index;
      entry["dim"] = s.dim;
      entry["poincare"] = poly_json(s.poincare);
      list.push_back(std::move(entry));
    }
    j["strata"] = std::move(list);
    *out_json = dup_string(j.dump());
  });
}

fm_status fm_consistency_json(const fm_weights* w, const char* base_poly,
                              char** out_json) {
  return guarded([&] {
    require_out(out_json);
    fm::ConsistencyReport report =
        fm::consistency_report(cfg_of(w), make_base(base_poly));
    json j;
    j["schema"] = 1;
    j["euler"] = report.euler.str();
    json checks = json::array();
    for (const auto& c : report.checks)
      checks.push_back({{"name", c.name}, {"pass", c.pass},
                        {"detail", c.detail}});
    j["checks"] = std::move(checks);
    j["all_pass"] = report.all_pass;
    *out_json = dup_string(j.dump());
  });
}

fm_status fm_poly_to_text(const fm_poly* p, char** text) {
  return guarded([&] {
    require_out(text);
    if (!p)
      throw fm::Error(fm::ErrorCode::InvalidArgument, "null poly handle");
    *text = dup_string(p->poly.to_text());
  });
}

fm_status fm_poly_to_json(const fm_poly* p, char** out_json) {
  return guarded([&] {
    require_out(out_json);
    if (!p)
      throw fm::Error(fm::ErrorCode::InvalidArgument, "null poly handle");
    json j;
    j["schema"] = 1;
    j["coefficients"] = poly_json(p->poly);
    j["text"] = p->poly.to_text();
    *out_json = dup_string(j.dump());
  });
}

void fm_poly_free(fm_poly* p) { delete p; }

void fm_verify_options_init(fm_verify_options* opts) {
  if (!opts) return;
  fm::VerifyConfig vc;
  opts->seed = vc.seed;
  opts->samples = vc.samples;
  opts->max_iterations = vc.max_iterations;
  opts->probe_starts = vc.probe_starts;
  opts->fiber_tol = vc.fiber_tol;
  opts->critical_residual_tol = vc.critical_residual_tol;
  opts->fd_step = vc.fd_step;
  opts->hessian_step = vc.hessian_step;
  opts->eig_rel_threshold = vc.eig_rel_threshold;
}

fm_status fm_verify_critical(const fm_weights* w,
                             const fm_verify_options* opts, char** out_json) {
  return guarded([&] {
    require_out(out_json);
    fm::VerifyConfig vc = to_config(opts);
    fm::TorusCensusResult census = fm::torus_census(cfg_of(w), vc);
    json j;
    j["schema"] = 1;
    json classes = json::array();
    for (const auto& entry : census.classes) {
      json cls;
      cls["f_value"] = entry.f_value;
      cls["index"] = entry.hessian.index;
      cls["nullity"] = entry.hessian.nullity;
      cls["slice_dim"] = entry.hessian.slice_dim;
      json members = json::array();
      for (const auto& [subset, lift] : entry.members)
        members.push_back({{"subset", fm::subset_to_string(subset)},
                           {"lift", lift}});
      cls["members"] = std::move(members);
      classes.push_back(std::move(cls));
    }
    j["classes"] = std::move(classes);
    j["measured_indices"] = census.measured_indices;
    j["formula_indices"] = census.formula_indices;
    *out_json = dup_string(j.dump());
  });
}

fm_status fm_verify_regular(const fm_weights* w,
                            const fm_verify_options* opts, char** out_json) {
  return guarded([&] {
    require_out(out_json);
    const fm::WeightConfig& cfg = cfg_of(w);
    fm::VerifyConfig vc = to_config(opts);
    auto reg = fm::is_regular(cfg);
    if (!reg.regular)
      throw fm::Error(fm::ErrorCode::IrregularWeights,
                      "regular-value sampling needs regular weights; "
                      "witness J = " + fm::subset_to_string(reg.witness));
    std::mt19937_64 rng(vc.seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    double worst_residual = 0, worst_fd = 0;
    int min_rank = 3;
    for (int k = 0; k < vc.samples; ++k) {
      fm::RepTuple p = fm::random_fiber_point(cfg, vc, rng);
      worst_residual = std::max(worst_residual, fm::mu_residual(p));
      min_rank = std::min(min_rank, fm::rank_dmu(p, vc.rank_rel_threshold));
      fm::TangentVector v = fm::TangentVector::zero(p);
      for (std::size_t i = 0; i < p.A.size(); ++i) {
        v.a[i] = {gauss(rng), gauss(rng), gauss(rng)};
        v.b[i] = {gauss(rng), gauss(rng), gauss(rng)};
      }
      for (std::size_t jj = 0; jj < p.C.size(); ++jj) {
        fm::AlgebraVector d{gauss(rng), gauss(rng), gauss(rng)};
        v.c[jj] = d - fm::adjoint(fm::inverse(p.C[jj]), d);
      }
      fm::AlgebraVector exact = fm::dmu_apply(p, v);
      fm::AlgebraVector fd = fm::dmu_finite_difference(p, v, vc.fd_step);
      worst_fd = std::max(worst_fd,
                          (exact - fd).norm() / std::max(fd.norm(), 1e-2));
    }
    const double fd_tol = 1e-6;
    json j;
    j["schema"] = 1;
    j["samples"] = vc.samples;
    j["worst_residual"] = worst_residual;
    j["fiber_tol"] = vc.fiber_tol;
    j["min_rank"] = min_rank;
    j["worst_fd_relative_error"] = worst_fd;
    j["fd_tol"] = fd_tol;
    j["all_pass"] =
        worst_residual < vc.fiber_tol && min_rank == 3 && worst_fd < fd_tol;
    *out_json = dup_string(j.dump());
  });
}

fm_status fm_probe_empty(const fm_weights* w, const fm_verify_options* opts,
                         char** out_json) {
  return guarded([&] {
    require_out(out_json);
    fm::VerifyConfig vc = to_config(opts);
    fm::ProbeResult result = fm::nonempty_probe(cfg_of(w), vc);
    json j;
    j["schema"] = 1;
    j["found"] = result.found;
    j["starts"] = result.starts;
    j["best_residual"] = result.best_residual;
    j["verdict"] = result.found ? "nonempty" : "probably_empty";
    *out_json = dup_string(j.dump());
  });
}

fm_status fm_selftest(const fm_verify_options* opts, char** out_json,
                      int* all_pass) {
  return guarded([&] {
    require_out(out_json);
    fm::SelftestReport report = fm::run_selftest(to_config(opts));
    json j;
    j["schema"] = 1;
    j["seed"] = report.seed;
    json criteria = json::array();
    for (const auto& c : report.criteria)
      criteria.push_back({{"name", c.name}, {"pass", c.pass},
                          {"detail", c.detail}});
    j["criteria"] = std::move(criteria);
    j["all_pass"] = report.all_pass;
    if (all_pass) *all_pass = report.all_pass ? 1 : 0;
    *out_json = dup_string(j.dump());
  });
}

}  // extern "C"
