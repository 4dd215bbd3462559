// Command-line front end. Talks to the engine exclusively through the C API
// so the shared library gets exercised the same way foreign-language callers
// would use it.
//
// Exit codes: 0 success, 1 a verification check failed, 2 bad input or an
// engine error.

#include <CLI11.hpp>
#include <json.hpp>
#include <cstdio>
#include <functional>
#include <memory>
#include <string>

#include "flatmorse.h"

using nlohmann::json;

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;

struct StringDeleter {
  void operator()(char* s) const { fm_string_free(s); }
};
using CString = std::unique_ptr<char, StringDeleter>;

struct WeightsDeleter {
  void operator()(fm_weights* w) const { fm_weights_free(w); }
};
using Weights = std::unique_ptr<fm_weights, WeightsDeleter>;

struct PolyDeleter {
  void operator()(fm_poly* p) const { fm_poly_free(p); }
};
using Poly = std::unique_ptr<fm_poly, PolyDeleter>;

[[noreturn]] void die(fm_status status) {
  std::fprintf(stderr, "error (%s): %s\n", fm_status_name(status),
               fm_last_error());
  std::exit(kExitInputError);
}

void check(fm_status status) {
  if (status != FM_OK) die(status);
}

struct CommonOptions {
  int genus = 1;
  std::string weights;  // empty means the classic one-puncture setup
  std::string base;     // empty means "assert the genus-0 base space empty"
  std::string format = "text";

  const char* base_or_null() const {
    return base.empty() ? nullptr : base.c_str();
  }
  bool json_output() const { return format == "json"; }
};

void add_common(CLI::App* cmd, CommonOptions& opts, bool with_base = false) {
  cmd->add_option("-g,--genus", opts.genus, "surface genus")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("-w,--weights", opts.weights,
                  "comma-separated rational puncture weights, e.g. 1/2,1/3 "
                  "(default: the single weight 1)");
  if (with_base)
    cmd->add_option("--base", opts.base,
                    "genus-0 base Poincare polynomial as comma-separated "
                    "coefficients, lowest degree first (default: empty space)");
  cmd->add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
}

// Parses the raw weights and normalizes them; the engine only accepts
// normalized (classic or parabolic) configurations.
Weights make_weights(const CommonOptions& opts, CLI::App* cmd) {
  fm_weights* raw = nullptr;
  bool given = cmd->count("--weights") > 0;
  check(fm_weights_parse(opts.genus, given ? opts.weights.c_str() : "1",
                         "raw", &raw));
  Weights raw_holder(raw);
  fm_weights* normalized = nullptr;
  check(fm_weights_normalize(raw, &normalized, nullptr));
  return Weights(normalized);
}

void print_poly(const Poly& p, const CommonOptions& opts) {
  if (opts.json_output()) {
    CString j;
    char* out = nullptr;
    check(fm_poly_to_json(p.get(), &out));
    j.reset(out);
    std::printf("%s\n", j.get());
  } else {
    char* out = nullptr;
    check(fm_poly_to_text(p.get(), &out));
    CString t(out);
    std::printf("%s\n", t.get());
  }
}

void print_json_or_text(const char* payload, const CommonOptions& opts,
                        const std::function<void(const json&)>& text_printer) {
  if (opts.json_output()) {
    std::printf("%s\n", payload);
  } else {
    text_printer(json::parse(payload));
  }
}

int run_selftest_command(const CommonOptions& opts, std::uint64_t seed,
                         int samples) {
  fm_verify_options vo;
  fm_verify_options_init(&vo);
  vo.seed = seed;
  if (samples > 0) vo.samples = samples;
  char* payload = nullptr;
  int all_pass = 0;
  check(fm_selftest(&vo, &payload, &all_pass));
  CString holder(payload);
  print_json_or_text(payload, opts, [](const json& j) {
    for (const auto& c : j["criteria"])
      std::printf("[%s] %s: %s\n",
                  c["pass"].get<bool>() ? "PASS" : "FAIL",
                  c["name"].get<std::string>().c_str(),
                  c["detail"].get<std::string>().c_str());
  });
  return all_pass ? 0 : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Morse theory of moduli spaces of flat SU(2) connections"};
  app.require_subcommand(1);
  app.set_config("--config");

  CommonOptions opts;
  std::uint64_t seed = 0;
  int samples = 0;
  bool seed_given = false;

  auto add_seed = [&](CLI::App* cmd) {
    cmd->add_option("--seed", seed, "random seed (default: built-in)")
        ->each([&](const std::string&) { seed_given = true; });
    cmd->add_option("--samples", samples,
                    "random sample count for statistical checks");
  };

  auto* betti = app.add_subcommand(
      "betti", "Poincare polynomial of the moduli space");
  add_common(betti, opts, true);

  auto* u2 = app.add_subcommand("u2", "Poincare polynomial of the U(2) space");
  add_common(u2, opts, true);

  auto* hn = app.add_subcommand(
      "hn", "closed-form Poincare polynomial of the unpunctured space");
  hn->add_option("-g,--genus", opts.genus, "surface genus")
      ->check(CLI::NonNegativeNumber);
  hn->add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  auto* strata = app.add_subcommand("strata", "critical strata of f");
  add_common(strata, opts, true);

  auto* symbolic = app.add_subcommand(
      "symbolic", "Poincare polynomial relative to the unknown base case");
  add_common(symbolic, opts);

  auto* regular = app.add_subcommand(
      "regular", "decide regularity of the weights exactly");
  add_common(regular, opts);

  auto* normalize = app.add_subcommand(
      "normalize", "normalize the weights and print the steps");
  add_common(normalize, opts);

  auto* dim = app.add_subcommand("dim", "dimension of the moduli space");
  add_common(dim, opts);

  auto* consistency = app.add_subcommand(
      "consistency", "compact-manifold checks on the computed polynomial");
  add_common(consistency, opts, true);

  auto* vcritical = app.add_subcommand(
      "verify-critical",
      "census of critical tori with numerically measured Morse indices");
  add_common(vcritical, opts);
  add_seed(vcritical);

  auto* vregular = app.add_subcommand(
      "verify-regular",
      "sample the fiber and cross-check the derivative formula");
  add_common(vregular, opts);
  add_seed(vregular);

  auto* probe = app.add_subcommand(
      "probe-empty", "multi-start search for a point of the genus-0 space");
  add_common(probe, opts);
  add_seed(probe);

  auto* selftest = app.add_subcommand(
      "selftest", "run the full ten-criterion verification suite");
  selftest->add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  add_seed(selftest);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }

  auto verify_options = [&] {
    fm_verify_options vo;
    fm_verify_options_init(&vo);
    if (seed_given) vo.seed = seed;
    if (samples > 0) vo.samples = samples;
    return vo;
  };

  if (hn->parsed()) {
    fm_poly* p = nullptr;
    check(fm_hn_poincare(opts.genus, &p));
    print_poly(Poly(p), opts);
    return 0;
  }

  if (selftest->parsed()) {
    fm_verify_options vo = verify_options();
    return run_selftest_command(opts, vo.seed, samples);
  }

  Weights w = make_weights(opts, app.get_subcommands().front());

  if (betti->parsed() || u2->parsed()) {
    fm_poly* p = nullptr;
    check(betti->parsed()
              ? fm_poincare(w.get(), opts.base_or_null(), &p)
              : fm_u2_poincare(w.get(), opts.base_or_null(), &p));
    print_poly(Poly(p), opts);
    return 0;
  }

  if (strata->parsed()) {
    char* payload = nullptr;
    check(fm_strata_json(w.get(), opts.base_or_null(), &payload));
    CString holder(payload);
    print_json_or_text(payload, opts, [](const json& j) {
      std::printf("dim M = %d\n", j["dimension"].get<int>());
      for (const auto& s : j["strata"]) {
        std::string subset =
            s.contains("subset") ? s["subset"].get<std::string>() : "-";
        std::string poly;
        for (const auto& c : s["poincare"])
          poly += (poly.empty() ? "" : ",") + c.get<std::string>();
        std::printf("%-14s J=%-8s index=%-3d dim=%-3d poincare=[%s]\n",
                    s["kind"].get<std::string>().c_str(), subset.c_str(),
                    s["index"].get<int>(), s["dim"].get<int>(), poly.c_str());
      }
    });
    return 0;
  }

  if (symbolic->parsed()) {
    char* payload = nullptr;
    check(fm_symbolic_poincare(w.get(), &payload));
    CString holder(payload);
    std::printf("%s\n", payload);
    return 0;
  }

  if (regular->parsed()) {
    int is_reg = 0;
    char* witness = nullptr;
    check(fm_weights_is_regular(w.get(), &is_reg, &witness));
    CString holder(witness);
    if (opts.json_output()) {
      json j{{"schema", 1}, {"regular", is_reg != 0}};
      if (!is_reg) j["witness"] = witness;
      std::printf("%s\n", j.dump().c_str());
    } else if (is_reg) {
      std::printf("regular\n");
    } else {
      std::printf("irregular: kappa_J is an integer for J = %s\n", witness);
    }
    return is_reg ? 0 : kExitCheckFailed;
  }

  if (normalize->parsed()) {
    // Redo the normalization to capture the transcript.
    fm_weights* raw = nullptr;
    bool given = app.get_subcommands().front()->count("--weights") > 0;
    check(fm_weights_parse(opts.genus, given ? opts.weights.c_str() : "1",
                           "raw", &raw));
    Weights raw_holder(raw);
    fm_weights* normalized = nullptr;
    char* transcript = nullptr;
    check(fm_weights_normalize(raw, &normalized, &transcript));
    Weights norm_holder(normalized);
    CString t_holder(transcript);
    if (opts.json_output()) {
      std::printf("{\"schema\":1,\"transcript\":%s}\n", transcript);
    } else {
      for (const auto& line : json::parse(transcript))
        std::printf("%s\n", line.get<std::string>().c_str());
    }
    return 0;
  }

  if (dim->parsed()) {
    int d = 0;
    check(fm_weights_dimension(w.get(), &d));
    if (opts.json_output())
      std::printf("{\"schema\":1,\"dimension\":%d}\n", d);
    else
      std::printf("%d\n", d);
    return 0;
  }

  if (consistency->parsed()) {
    char* payload = nullptr;
    check(fm_consistency_json(w.get(), opts.base_or_null(), &payload));
    CString holder(payload);
    bool all_pass = json::parse(payload)["all_pass"].get<bool>();
    print_json_or_text(payload, opts, [](const json& j) {
      for (const auto& c : j["checks"])
        std::printf("[%s] %s: %s\n",
                    c["pass"].get<bool>() ? "PASS" : "FAIL",
                    c["name"].get<std::string>().c_str(),
                    c["detail"].get<std::string>().c_str());
      std::printf("chi = %s\n", j["euler"].get<std::string>().c_str());
    });
    return all_pass ? 0 : kExitCheckFailed;
  }

  if (vcritical->parsed()) {
    fm_verify_options vo = verify_options();
    char* payload = nullptr;
    check(fm_verify_critical(w.get(), &vo, &payload));
    CString holder(payload);
    print_json_or_text(payload, opts, [](const json& j) {
      for (const auto& c : j["classes"]) {
        std::string members;
        for (const auto& m : c["members"])
          members += m["subset"].get<std::string>() + "/" +
                     std::to_string(m["lift"].get<int>()) + " ";
        std::printf("f=%+.6f index=%d nullity=%d members: %s\n",
                    c["f_value"].get<double>(), c["index"].get<int>(),
                    c["nullity"].get<int>(), members.c_str());
      }
      std::printf("index multisets agree with the closed formula\n");
    });
    return 0;
  }

  if (vregular->parsed()) {
    fm_verify_options vo = verify_options();
    char* payload = nullptr;
    check(fm_verify_regular(w.get(), &vo, &payload));
    CString holder(payload);
    bool all_pass = json::parse(payload)["all_pass"].get<bool>();
    print_json_or_text(payload, opts, [](const json& j) {
      std::printf("samples: %d\n", j["samples"].get<int>());
      std::printf("worst fiber residual: %.3e (tol %.1e)\n",
                  j["worst_residual"].get<double>(),
                  j["fiber_tol"].get<double>());
      std::printf("min derivative rank: %d (want 3)\n",
                  j["min_rank"].get<int>());
      std::printf("worst FD relative error: %.3e (tol %.1e)\n",
                  j["worst_fd_relative_error"].get<double>(),
                  j["fd_tol"].get<double>());
    });
    return all_pass ? 0 : kExitCheckFailed;
  }

  if (probe->parsed()) {
    fm_verify_options vo = verify_options();
    char* payload = nullptr;
    check(fm_probe_empty(w.get(), &vo, &payload));
    CString holder(payload);
    print_json_or_text(payload, opts, [](const json& j) {
      std::printf("%s (starts: %d, best residual %.3e)\n",
                  j["verdict"].get<std::string>().c_str(),
                  j["starts"].get<int>(), j["best_residual"].get<double>());
    });
    return 0;
  }

  return kExitInputError;
}
