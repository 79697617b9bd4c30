#include "doctest.h"
#include "kwise/krawtchouk.hpp"
#include "kwise/lp.hpp"
#include "kwise/noise.hpp"
#include "kwise/transform.hpp"
#include "support.hpp"

using namespace kwise;
using kwise::test::R;

namespace {

WeightPmf max_tail_vertex(int n, int k, int t) { return *extremal_tail(n, k, t, ExtremalKind::max_tail).primal; }

}  // namespace

TEST_CASE("bu_to_sb on the binomial") {
  const auto q = bu_to_sb(binomial_pmf(8), 2);
  CHECK(moments(q, 2) == std::vector<Rational>{0, 8});
  CHECK(q.support_size() <= 12);
  CHECK(interval_mass(q, -8, 8) == 1);
  CHECK(interval_mass(binomial_pmf(8), -8, 8) == 1);
}

TEST_CASE("bu_to_sb uses floor(k/2) rounds") {
  CHECK(noise_rounds_for(1) == 0);
  CHECK(noise_rounds_for(2) == 1);
  CHECK(noise_rounds_for(5) == 2);
  const auto p = max_tail_vertex(12, 2, 6);
  CHECK(bu_to_sb(p, 2) == replace_noise(sparsify(p, 2), 1));
  CHECK_THROWS_AS(bu_to_sb(p, 1), Error);
}

TEST_CASE("certify_bias case bounds") {
  CHECK(abs(case2_bound(60, 4) - Real(4) / 15) < Real("1e-40"));
  CHECK(abs(case3_bound(60, 4) - Real(1) / 225) < Real("1e-40"));
  const auto cert = certify_bias(bu_to_sb(max_tail_vertex(60, 4, 16), 4), 4);
  CHECK(cert.n == 60);
  for (const auto& row : cert.rows) {
    if (row.ell > 4) continue;
    CHECK(row.case_id == 1);
    CHECK(row.bias == 0);
    CHECK(row.bound == 0);
    CHECK(row.pass);
  }
  CHECK(cert.all_pass());
}

TEST_CASE("interval property on LP vertices") {
  for (auto [n, k, t] : {std::tuple{8, 2, 4}, std::tuple{20, 3, 8}, std::tuple{60, 4, 16}}) {
    const auto p = max_tail_vertex(n, k, t);
    const auto q = bu_to_sb(p, k);
    CHECK(sparsify(p, k) == p);
    CHECK(interval_property_check(p, q, k));
    CHECK(interval_mass(q, -n, n) == 1);
    for (int w = -n; w <= n; w += 2) CHECK(interval_mass(q, w - k, w + k) >= p.mass(w));
    // shifted tail: Pr[Q >= t - k] >= Pr[P >= t]
    CHECK(tail_mass(q, t - k) >= tail_mass(p, t));
  }
}

TEST_CASE("interval property holds against the sparsified law of a full-support input") {
  const auto b = binomial_pmf(8);
  const auto q = bu_to_sb(b, 2);
  CHECK(interval_property_check(sparsify(b, 2), q, 2));
}

TEST_CASE("interval property can fail against a full-support input") {
  // Sparsification moves mass by more than k, so the containment is only
  // guaranteed relative to the sparsified law.
  const auto b = binomial_pmf(8);
  const auto q = bu_to_sb(b, 2);
  const auto bad = interval_property_violation(b, q, 2);
  REQUIRE(bad);
  CHECK(*bad == std::pair{-4, 6});
  CHECK(interval_mass(q, -6, 8) < interval_mass(b, -4, 6));
}

TEST_CASE("pipeline outputs are k-uniform with at most (k+1)^2 weights") {
  for (int n : {12, 30, 60}) {
    for (int k = 2; k <= 5; ++k) {
      const auto p = max_tail_vertex(n, k, 2 * k);
      const auto q = bu_to_sb(p, k);
      CHECK(is_k_uniform(q, k));
      CHECK(q.support_size() <= static_cast<std::size_t>((k + 1) * (k + 1)));
      const auto profile = bias_profile(q);
      for (int ell = 1; ell <= k; ++ell) CHECK(profile.biases[static_cast<std::size_t>(ell)] == 0);
    }
  }
}

TEST_CASE("certificate biases match the generating-function oracle") {
  const auto q = bu_to_sb(max_tail_vertex(100, 4, 20), 4);
  const auto cert = certify_bias(q, 4);
  const auto ref = oracle::bias_by_generating_function(100, test::masses(q));
  for (const auto& row : cert.rows) CHECK(row.bias == ref[static_cast<std::size_t>(row.ell)]);
}

TEST_CASE("slab-constrained input stays within 21 sqrt(kn)") {
  const int n = 100;
  const int k = 4;
  const auto s = construct_k_uniform(n, k, SupportFilter::slab(40));
  REQUIRE(s.primal);
  const auto q = bu_to_sb(*s.primal, k);
  for (int w : q.support()) CHECK(std::abs(w) <= 40 + 2 * (k / 2));
  CHECK(is_k_uniform(q, k));
}
