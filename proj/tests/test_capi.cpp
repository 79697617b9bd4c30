#include <cstring>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "kwise/kwise.h"

namespace {

std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out(s);
  kw_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("pmf handles round-trip through JSON") {
  kw_pmf* b = nullptr;
  REQUIRE(kw_pmf_binomial(4, &b) == KW_OK);
  char* text = nullptr;
  REQUIRE(kw_pmf_to_json(b, &text) == KW_OK);
  const std::string json = take(text);
  kw_pmf* again = nullptr;
  REQUIRE(kw_pmf_from_json(json.c_str(), &again) == KW_OK);
  char* tail_a = nullptr;
  char* tail_b = nullptr;
  REQUIRE(kw_tail_mass(b, 2, &tail_a) == KW_OK);
  REQUIRE(kw_tail_mass(again, 2, &tail_b) == KW_OK);
  CHECK(take(tail_a) == "5/16");
  CHECK(take(tail_b) == "5/16");
  int n = 0;
  CHECK(kw_pmf_n(again, &n) == KW_OK);
  CHECK(n == 4);
  kw_pmf_free(b);
  kw_pmf_free(again);
}

TEST_CASE("errors carry status codes and messages") {
  kw_pmf* p = nullptr;
  CHECK(kw_pmf_slice(2, 1, &p) == KW_PARITY);
  CHECK(p == nullptr);
  CHECK(std::strlen(kw_last_error()) > 0);
  CHECK(kw_pmf_from_json("{not json", &p) == KW_PARSE);
  CHECK(kw_pmf_from_json("{\"n\":2,\"pmf\":[{\"w\":0,\"p\":\"1/2\"}]}", &p) != KW_OK);
  CHECK(kw_pmf_binomial(4, nullptr) == KW_INVALID_ARGUMENT);
  char* s = nullptr;
  CHECK(kw_tail_mass(nullptr, 0, &s) == KW_INVALID_ARGUMENT);
  CHECK(kw_gaussmix("nope", "{}", &s) == KW_INVALID_ARGUMENT);
  CHECK(kw_run_separation("thm11", "{}", "json", &s) != KW_OK);
  REQUIRE(kw_pmf_binomial(2, &p) == KW_OK);
  CHECK(std::strlen(kw_last_error()) == 0);
  kw_pmf_free(p);
}

TEST_CASE("extremal LP through the C API") {
  kw_lp_solution* s = nullptr;
  REQUIRE(kw_extremal_tail(4, 2, 4, "max_tail", nullptr, &s) == KW_OK);
  kw_lp_status status;
  REQUIRE(kw_lp_solution_status(s, &status) == KW_OK);
  CHECK(status == KW_LP_OPTIMAL);
  char* v = nullptr;
  REQUIRE(kw_lp_solution_value(s, &v) == KW_OK);
  CHECK(take(v) == "1/6");
  kw_pmf* primal = nullptr;
  REQUIRE(kw_lp_solution_primal(s, &primal) == KW_OK);
  int uniform = 0;
  CHECK(kw_is_k_uniform(primal, 2, &uniform) == KW_OK);
  CHECK(uniform == 1);
  kw_pmf_free(primal);
  kw_lp_solution_free(s);

  const kw_filter only_four{KW_FILTER_MODULAR, 8, 4, 0};
  REQUIRE(kw_construct_k_uniform(4, 2, &only_four, nullptr, &s) == KW_OK);
  REQUIRE(kw_lp_solution_status(s, &status) == KW_OK);
  CHECK(status == KW_LP_INFEASIBLE);
  CHECK(kw_lp_solution_primal(s, &primal) == KW_PRECONDITION);
  kw_lp_solution_free(s);

  CHECK(kw_construct_k_uniform(20, 2, nullptr, "max_moment", &s) == KW_INVALID_ARGUMENT);
  REQUIRE(kw_construct_k_uniform(20, 2, nullptr, "min_moment:4", &s) == KW_OK);
  kw_lp_solution_free(s);
}

TEST_CASE("noise and pipeline through the C API") {
  kw_pmf* slice = nullptr;
  REQUIRE(kw_pmf_slice(1, 1, &slice) == KW_OK);
  kw_pmf* smoothed = nullptr;
  REQUIRE(kw_smooth(slice, "1/2", &smoothed) == KW_OK);
  char* text = nullptr;
  REQUIRE(kw_pmf_to_json(smoothed, &text) == KW_OK);
  const auto j = nlohmann::json::parse(take(text));
  CHECK(j["pmf"][0]["w"] == -1);
  CHECK(j["pmf"][0]["p"] == "1/4");
  CHECK(j["pmf"][1]["p"] == "3/4");
  kw_pmf_free(slice);
  kw_pmf_free(smoothed);

  kw_lp_solution* s = nullptr;
  REQUIRE(kw_extremal_tail(60, 4, 16, "max_tail", nullptr, &s) == KW_OK);
  kw_pmf* p = nullptr;
  REQUIRE(kw_lp_solution_primal(s, &p) == KW_OK);
  kw_pmf* q = nullptr;
  REQUIRE(kw_bu_to_sb(p, 4, &q) == KW_OK);
  int ok = 0;
  REQUIRE(kw_interval_property_check(p, q, 4, &ok) == KW_OK);
  CHECK(ok == 1);
  REQUIRE(kw_certify_bias(q, 4, &text) == KW_OK);
  CHECK(nlohmann::json::parse(take(text))["all_pass"] == true);
  kw_pmf_free(p);
  kw_pmf_free(q);
  kw_lp_solution_free(s);
}

TEST_CASE("separation and gaussmix through the C API") {
  char* out = nullptr;
  REQUIRE(kw_run_separation("thm8", R"({"n":64,"k":2,"rho":"1/2"})", "json", &out) == KW_OK);
  const auto report = nlohmann::json::parse(take(out));
  CHECK(report["advantage"] == "22018251467509267016172814377212761/21267647932558653966460912964485513216");
  REQUIRE(kw_gaussmix("gapmiddle", R"({"k":1,"d_half":1,"alpha":1})", &out) == KW_OK);
  CHECK(std::stod(nlohmann::json::parse(take(out))["value"].get<std::string>()) == doctest::Approx(0.1080830896).epsilon(1e-9));
  REQUIRE(kw_gaussmix("erdelyi", R"({"coeffs":["1","-1"],"m":1,"L":1})", &out) == KW_OK);
  CHECK(nlohmann::json::parse(take(out))["pass"] == false);
  REQUIRE(kw_analytic("be", R"({"rho":"0","n":16})", &out) == KW_OK);
  CHECK(nlohmann::json::parse(take(out))["value"].get<std::string>().rfind("0.25", 0) == 0);
}

namespace {

void count_results(const kw_criterion* c, void* user) {
  auto* seen = static_cast<int*>(user);
  CHECK(c->passed == 1);
  CHECK(c->name != nullptr);
  ++*seen;
}

}  // namespace

TEST_CASE("verify suite through the C API") {
  int seen = 0;
  int all = 0;
  REQUIRE(kw_verify("6,7", 1, 1, count_results, &seen, &all) == KW_OK);
  CHECK(seen == 2);
  CHECK(all == 1);
  CHECK(kw_verify("bogus", 1, 1, nullptr, nullptr, &all) == KW_INVALID_ARGUMENT);
}
