#include "doctest.h"
#include "kwise/lp.hpp"
#include "support.hpp"

using namespace kwise;
using kwise::test::R;

namespace {

LpProblem two_variable(std::vector<std::vector<Rational>> rows, std::vector<Rational> rhs) {
  LpProblem p;
  p.n = 2;
  p.variables = {-2, 2};
  p.rows = std::move(rows);
  p.rhs = std::move(rhs);
  p.objective = {1, 0};
  return p;
}

Rational eval(const RationalPoly& q, int w) { return q(Rational(w)); }

}  // namespace

TEST_CASE("solve_exact_lp small problems") {
  const auto s = solve_exact_lp(two_variable({{1, 1}}, {1}));
  REQUIRE(s.status == LpStatus::optimal);
  CHECK(s.value == 1);
  CHECK(s.x == std::vector<Rational>{1, 0});

  const auto bad = solve_exact_lp(two_variable({{1, 0}, {1, 0}}, {1, 0}));
  CHECK(bad.status == LpStatus::infeasible);

  auto unbounded = two_variable({{1, -1}}, {0});
  CHECK(solve_exact_lp(unbounded).status == LpStatus::unbounded);
}

TEST_CASE("solve_exact_lp validates its input") {
  auto p = two_variable({{1}}, {1});
  CHECK_THROWS_AS(solve_exact_lp(p), Error);
  auto q = two_variable({{1, 1}}, {1});
  q.variables = {-2, -2};
  CHECK_THROWS_AS(solve_exact_lp(q), Error);
}

TEST_CASE("extremal_tail examples") {
  const auto s = extremal_tail(4, 2, 4, ExtremalKind::max_tail);
  REQUIRE(s.status == LpStatus::optimal);
  CHECK(s.value == R("1/6"));
  REQUIRE(s.primal);
  CHECK(*s.primal == test::pmf(4, {{4, R("1/6")}, {-2, R("1/3")}, {0, R("1/2")}}));
  CHECK(extremal_tail(4, 4, 4, ExtremalKind::max_tail).value == R("1/16"));
  const auto empty = extremal_tail(4, 2, 6, ExtremalKind::max_tail);
  REQUIRE(empty.status == LpStatus::optimal);
  CHECK(empty.value == 0);
}

TEST_CASE("construct_k_uniform examples") {
  const auto mod = construct_k_uniform(8, 1, SupportFilter::modular(4, 2));
  REQUIRE(mod.status == LpStatus::optimal);
  REQUIRE(mod.primal);
  CHECK(is_k_uniform(*mod.primal, 1));
  for (int w : mod.primal->support()) CHECK(((w % 4) + 4) % 4 == 2);

  const auto all = construct_k_uniform(10, 3);
  REQUIRE(all.primal);
  CHECK(is_k_uniform(*all.primal, 3));
  CHECK(all.primal->support_size() <= 4);

  CHECK(construct_k_uniform(4, 2, SupportFilter::only({4})).status == LpStatus::infeasible);
}

TEST_CASE("construct_k_uniform with moment objectives") {
  WeightObjective fourth{[](int w) { return pow(Rational(w), 4); }, Sense::minimize};
  const auto s = construct_k_uniform(20, 2, SupportFilter::all(), fourth);
  REQUIRE(s.primal);
  CHECK(is_k_uniform(*s.primal, 2));
  // E[W^4] >= E[W^2]^2 = 400
  CHECK(s.value >= 400);
  CHECK(s.value <= moments(binomial_pmf(20), 4)[3]);
}

TEST_CASE("sparsify examples") {
  const auto one = sparsify(binomial_pmf(2), 1);
  CHECK(one.support_size() <= 2);
  CHECK(is_k_uniform(one, 1));
  for (int w : one.support()) CHECK(binomial_pmf(2).mass(w) > 0);

  CHECK(sparsify(binomial_pmf(4), 4) == binomial_pmf(4));

  const auto p = test::pmf(6, {{-4, R("3/16")}, {0, R("5/8")}, {4, R("3/16")}});
  CHECK(is_k_uniform(p, 2));
  const auto mixed = mixture(binomial_pmf(6), p, R("1/2"));
  const auto s = sparsify(mixed, 2);
  CHECK(s.support_size() <= 3);
  CHECK(moments(s, 2) == moments(mixed, 2));
}

TEST_CASE("LP values match vertex enumeration for n <= 10, k <= 3") {
  for (int n = 2; n <= 10; n += 2) {
    for (int k = 1; k <= std::min(3, n); ++k) {
      for (int t = -n; t <= n; t += 2) {
        const auto lp = extremal_tail(n, k, t, ExtremalKind::max_tail);
        const auto ref = oracle::extremal_by_vertices(n, k, t, oracle::Objective::tail);
        REQUIRE(ref.feasible);
        CHECK(lp.value == ref.value);
        const auto point = extremal_tail(n, k, t, ExtremalKind::max_point);
        CHECK(point.value == oracle::extremal_by_vertices(n, k, t, oracle::Objective::point).value);
      }
    }
  }
}

TEST_CASE("dual certificates close the duality gap exactly") {
  for (int n : {12, 20, 30}) {
    const auto bm = binomial_moments(n, 4);
    for (int k = 1; k <= 4; ++k) {
      for (int t = 0; t <= n; t += 2) {
        const auto s = extremal_tail(n, k, t, ExtremalKind::max_tail);
        REQUIRE(s.dual);
        CHECK(s.dual->degree() <= k);
        Rational expectation = 0;
        for (int j = 0; j <= s.dual->degree(); ++j) expectation += s.dual->coefficient(j) * Rational(bm[static_cast<std::size_t>(j)]);
        CHECK(expectation == s.value);
        for (int w = -n; w <= n; w += 2) CHECK(eval(*s.dual, w) >= (w >= t ? 1 : 0));
      }
    }
  }
}

TEST_CASE("primal vertices satisfy every constraint and have small support") {
  for (int n : {8, 15, 24}) {
    for (int k = 1; k <= 4; ++k) {
      for (int t = -n; t <= n; t += 3) {
        const auto s = extremal_tail(n, k, t, ExtremalKind::max_tail);
        REQUIRE(s.primal);
        CHECK(is_k_uniform(*s.primal, k));
        CHECK(s.primal->support_size() <= static_cast<std::size_t>(k + 1));
        CHECK(tail_mass(*s.primal, t) == s.value);
      }
    }
  }
}

TEST_CASE("extremal solutions are deterministic") {
  const auto a = extremal_tail(30, 3, 10, ExtremalKind::max_tail);
  const auto b = extremal_tail(30, 3, 10, ExtremalKind::max_tail);
  CHECK(a.x == b.x);
  CHECK(*a.primal == *b.primal);
}

TEST_CASE("signed gap objective") {
  for (int n = 2; n <= 10; n += 2) {
    for (int k = 1; k <= 2; ++k) {
      for (int t = -n; t <= n; t += 2) {
        const auto s = extremal_tail(n, k, t, ExtremalKind::signed_gap);
        CHECK(s.value == oracle::extremal_by_vertices(n, k, t, oracle::Objective::signed_gap).value);
        REQUIRE(s.primal);
        CHECK(abs(tail_mass(*s.primal, t) - tail_mass(binomial_pmf(n), t)) == s.value);
      }
    }
  }
}

TEST_CASE("support filters") {
  CHECK(SupportFilter::slab(3).admitted(6) == std::vector<int>{-2, 0, 2});
  CHECK(SupportFilter::modular(4, 2).admitted(6) == std::vector<int>{-6, -2, 2, 6});
  CHECK(SupportFilter::all().admitted(2) == std::vector<int>{-2, 0, 2});
  CHECK_THROWS_AS(SupportFilter::modular(0, 1), Error);
  CHECK(parse_extremal_kind("max_point") == ExtremalKind::max_point);
  CHECK_THROWS_AS(parse_extremal_kind("min_tail"), Error);
}
