// Exercises the shared library strictly through the C header, the way a
// foreign-language binding would.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <string>

#include "flatmorse.h"

using nlohmann::json;

namespace {

struct Weights {
  fm_weights* h = nullptr;
  ~Weights() { fm_weights_free(h); }
};

struct Poly {
  fm_poly* h = nullptr;
  ~Poly() { fm_poly_free(h); }
};

std::string take(char* s) {
  std::string out = s ? s : "";
  fm_string_free(s);
  return out;
}

Weights parabolic(int genus, const char* weights) {
  Weights w;
  REQUIRE(fm_weights_parse(genus, weights, "parabolic", &w.h) == FM_OK);
  return w;
}

}  // namespace

TEST_CASE("status names and error reporting") {
  CHECK(std::string(fm_status_name(FM_OK)) == "ok");
  CHECK(std::string(fm_status_name(FM_ERR_IRREGULAR_WEIGHTS)) ==
        "irregular_weights");

  fm_weights* w = nullptr;
  CHECK(fm_weights_parse(1, "0.5", "parabolic", &w) == FM_ERR_PARSE);
  CHECK(std::string(fm_last_error()).find("0.5") != std::string::npos);
  CHECK(fm_weights_parse(1, "1/2", "diagonal", &w) == FM_ERR_PARSE);
  CHECK(fm_weights_parse(1, "1/2", "parabolic", nullptr) ==
        FM_ERR_INVALID_ARGUMENT);
}

TEST_CASE("weights lifecycle: parse, normalize, regularity, dimension") {
  fm_weights* raw = nullptr;
  REQUIRE(fm_weights_parse(1, "1/10,1/10,1", "raw", &raw) == FM_OK);
  Weights raw_holder{raw};

  fm_weights* norm = nullptr;
  char* transcript = nullptr;
  REQUIRE(fm_weights_normalize(raw, &norm, &transcript) == FM_OK);
  Weights norm_holder{norm};
  json steps = json::parse(take(transcript));
  CHECK(steps.is_array());
  CHECK(steps.size() == 2);  // drop the t = 1 puncture, flip t_1

  int regular = 0;
  char* witness = nullptr;
  REQUIRE(fm_weights_is_regular(norm, &regular, &witness) == FM_OK);
  CHECK(regular == 1);
  CHECK(witness == nullptr);

  int dim = 0;
  REQUIRE(fm_weights_dimension(norm, &dim) == FM_OK);
  CHECK(dim == 4);  // 6g - 6 + 2n with g = 1, n = 2
}

TEST_CASE("irregular weights report a witness") {
  Weights w = parabolic(0, "1/2,1/2");
  int regular = 1;
  char* witness = nullptr;
  REQUIRE(fm_weights_is_regular(w.h, &regular, &witness) == FM_OK);
  CHECK(regular == 0);
  CHECK(take(witness) == "{1}");
}

TEST_CASE("polynomials through the C interface") {
  Poly p;
  REQUIRE(fm_hn_poincare(2, &p.h) == FM_OK);
  char* text = nullptr;
  REQUIRE(fm_poly_to_text(p.h, &text) == FM_OK);
  CHECK(take(text) == "1 + t^2 + 4t^3 + t^4 + t^6");

  char* js = nullptr;
  REQUIRE(fm_poly_to_json(p.h, &js) == FM_OK);
  json j = json::parse(take(js));
  CHECK(j["schema"] == 1);
  CHECK(j["coefficients"] ==
        json({"1", "0", "1", "4", "1", "0", "1"}));
}

TEST_CASE("poincare with and without a base polynomial") {
  Weights w = parabolic(1, "1/2");
  Poly empty_base;
  REQUIRE(fm_poincare(w.h, nullptr, &empty_base.h) == FM_OK);
  char* text = nullptr;
  REQUIRE(fm_poly_to_text(empty_base.h, &text) == FM_OK);
  CHECK(take(text) == "1 + t^2");

  // Base = point: adds (1+t^3)^2.
  Poly with_base;
  REQUIRE(fm_poincare(w.h, "1", &with_base.h) == FM_OK);
  REQUIRE(fm_poly_to_text(with_base.h, &text) == FM_OK);
  CHECK(take(text) == "2 + t^2 + 2t^3 + t^6");

  Poly bad;
  CHECK(fm_poincare(w.h, "1,x", &bad.h) == FM_ERR_PARSE);
}

TEST_CASE("irregular weights refuse the Morse computation") {
  Weights w = parabolic(1, "1/2,1/2");
  Poly p;
  CHECK(fm_poincare(w.h, nullptr, &p.h) == FM_ERR_IRREGULAR_WEIGHTS);
  CHECK(std::string(fm_last_error()).find("{1}") != std::string::npos);
}

TEST_CASE("strata and consistency payloads") {
  Weights w = parabolic(2, "1/2");
  char* js = nullptr;
  REQUIRE(fm_strata_json(w.h, nullptr, &js) == FM_OK);
  json strata = json::parse(take(js));
  CHECK(strata["schema"] == 1);
  CHECK(strata["dimension"] == 8);
  CHECK(strata["strata"].size() == 4);  // two ends, two tori

  REQUIRE(fm_consistency_json(w.h, nullptr, &js) == FM_OK);
  json cons = json::parse(take(js));
  CHECK(cons["all_pass"] == true);
  CHECK(cons["euler"] == "0");
}

TEST_CASE("symbolic form is parabolic-only") {
  char* js = nullptr;
  Weights w = parabolic(1, "1/2");
  REQUIRE(fm_symbolic_poincare(w.h, &js) == FM_OK);
  json j = json::parse(take(js));
  CHECK(j["remainder"] == json({"1", "0", "1"}));

  fm_weights* cls = nullptr;
  REQUIRE(fm_weights_parse(2, "1", "classic", &cls) == FM_OK);
  Weights cls_holder{cls};
  CHECK(fm_symbolic_poincare(cls, &js) == FM_ERR_INVALID_ARGUMENT);
}

TEST_CASE("numeric verification round trip") {
  fm_verify_options vo;
  fm_verify_options_init(&vo);
  CHECK(vo.samples > 0);
  CHECK(vo.fiber_tol > 0);
  vo.samples = 5;

  Weights w = parabolic(1, "1/2");
  char* js = nullptr;
  REQUIRE(fm_verify_regular(w.h, &vo, &js) == FM_OK);
  json reg = json::parse(take(js));
  CHECK(reg["all_pass"] == true);
  CHECK(reg["min_rank"] == 3);

  REQUIRE(fm_verify_critical(w.h, &vo, &js) == FM_OK);
  json crit = json::parse(take(js));
  CHECK(crit["classes"].size() == 2);
  CHECK(crit["measured_indices"] == json({0, 2}));
  CHECK(crit["measured_indices"] == crit["formula_indices"]);
}

TEST_CASE("emptiness probe verdicts") {
  fm_verify_options vo;
  fm_verify_options_init(&vo);
  char* js = nullptr;

  Weights found = parabolic(0, "1/2,1/2,1/2");
  REQUIRE(fm_probe_empty(found.h, &vo, &js) == FM_OK);
  CHECK(json::parse(take(js))["verdict"] == "nonempty");

  Weights empty = parabolic(0, "9/10,1/10");
  REQUIRE(fm_probe_empty(empty.h, &vo, &js) == FM_OK);
  CHECK(json::parse(take(js))["verdict"] == "probably_empty");
}

TEST_CASE("selftest runs reduced-scale through the C interface") {
  fm_verify_options vo;
  fm_verify_options_init(&vo);
  vo.samples = 5;  // keep this binary fast; the acceptance run is full scale
  char* js = nullptr;
  int all_pass = 0;
  REQUIRE(fm_selftest(&vo, &js, &all_pass) == FM_OK);
  json j = json::parse(take(js));
  CHECK(j["criteria"].size() == 10);
  CHECK(all_pass == 1);
}
