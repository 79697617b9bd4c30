#include <boost/math/special_functions/erf.hpp>

#include "doctest.h"
#include "kwise/analytic.hpp"
#include "kwise/distinguish.hpp"
#include "kwise/lp.hpp"
#include "support.hpp"

using namespace kwise;
using kwise::test::R;

TEST_CASE("fact2 example") {
  const Real expected = sqrt(Real(2)) / (2 * e());
  CHECK(abs(analytic::fact2(4, 1, Real(4)) - expected) < Real("1e-40"));
}

TEST_CASE("phi_tail brackets the normal tail") {
  const auto [lo, hi] = analytic::phi_tail(Real(1));
  CHECK(abs(hi - exp(Real(-0.5)) / sqrt(2 * pi())) < Real("1e-40"));
  CHECK(abs(lo - Real("0.12098536225957168")) < Real("1e-15"));
  CHECK(lo <= analytic::normal_tail(Real(1)));
  CHECK(analytic::normal_tail(Real(1)) <= hi);
  for (int i = 1; i <= 60; ++i) {
    const Real theta = Real(i) / 10;
    const Real exact = boost::math::erfc(theta / sqrt(Real(2))) / 2;
    const auto [l, h] = analytic::phi_tail(theta);
    CHECK(l <= exact + Real("1e-10"));
    CHECK(exact <= h + Real("1e-10"));
  }
  CHECK_THROWS_AS(analytic::phi_tail(Real(0)), Error);
}

TEST_CASE("berry esseen example") {
  CHECK(abs(analytic::berry_esseen_noise(Real(0), 16) - Real(1) / 4) < Real("1e-40"));
}

TEST_CASE("binomial point masses dominate the Gaussian-shaped lower bound for even n <= 200") {
  for (int n = 2; n <= 200; n += 2) {
    const auto b = binomial_pmf(n);
    for (int a = -n; a <= n; a += 2) {
      const Real rhs = pow(Real(2), -Real(a) * a / n) / (2 * sqrt(Real(n)));
      CHECK(abs(analytic::stirling(n, a) - rhs) < Real("1e-40"));
      CHECK(to_real(b.mass(a)) >= rhs - Real("1e-15"));
    }
  }
}

TEST_CASE("fact2 bounds every two-sided extremal tail") {
  for (int n : {20, 40, 60}) {
    for (int k = 1; k <= 2; ++k) {
      for (int t = 2; t <= n; t += 2) {
        // max over 2k-uniform laws of Pr[W >= t] + Pr[W <= -t]
        LpProblem lp = moment_lp(n, 2 * k, admissible_weights(n),
                                 WeightObjective{[t](int w) { return Rational(w >= t || w <= -t ? 1 : 0); }, Sense::maximize});
        const auto s = solve_exact_lp(lp);
        REQUIRE(s.status == LpStatus::optimal);
        CHECK(to_real(s.value) <= analytic::fact2(n, k, Real(t)) + Real("1e-12"));
      }
    }
  }
}

TEST_CASE("Petrov and Bernstein helpers") {
  const auto r = analytic::petrov_noise(64, 0, Real("0.5"), Real(1), Real(1));
  CHECK(r.factor > 0);
  CHECK(r.theta_in_range == (Real(1) <= r.theta_max));
  CHECK(analytic::bernstein_noise(64, Real("0.5"), Real(8), Real("0.125")) > 0);
}

TEST_CASE("advantage examples") {
  const auto b = binomial_pmf(4);
  for (int t = -4; t <= 4; t += 2) CHECK(advantage(b, b, t) == 0);
  CHECK(advantage(b, slice_pmf(4, 0), 2) == R("5/16"));
  const auto best = best_threshold(slice_pmf(4, 4), b);
  CHECK(best.t == 4);
  CHECK(best.advantage == R("15/16"));
  const auto iv = best_interval(slice_pmf(4, 0), b);
  CHECK(iv.a == 0);
  CHECK(iv.b == 0);
  CHECK(iv.advantage == R("10/16"));
}

TEST_CASE("one-sided scans are consistent with the complement identity") {
  std::mt19937_64 rng(41);
  for (int n = 2; n <= 14; n += 2) {
    const auto p = test::random_pmf(n, rng);
    const auto b = binomial_pmf(n);
    for (int t = -n; t <= n; t += 2) {
      // Pr[-W >= -t + 2] = Pr[W <= t - 2] = 1 - Pr[W >= t], the same for B.
      CHECK(advantage(complement(p), b, -t + 2) == -advantage(p, b, t));
    }
  }
}

TEST_CASE("separation scenarios produce positive exact advantages") {
  ParamSet p8;
  p8.n = 64;
  p8.k = 2;
  p8.rho = R("1/2");
  const auto r8 = run_separation(Scenario::thm8, p8);
  CHECK(r8.advantage > 0);
  CHECK(r8.t > 0);
  CHECK(r8.advantage == r8.lhs - r8.rhs);

  ParamSet p9;
  p9.n = 60;
  p9.k = 2;
  p9.k_prime = 4;
  p9.rho = R("1/2");
  const auto r9 = run_separation(Scenario::thm9, p9);
  CHECK(r9.advantage > 0);
  CHECK(r9.rhs == extremal_tail(60, 4, r9.t, ExtremalKind::max_tail).value);

  ParamSet p10;
  p10.rho = R("1/2");
  const auto r10 = run_separation(Scenario::thm10, p10);
  CHECK(r10.advantage > 0);
  REQUIRE(r10.interval);
  CHECK(r10.interval->first <= r10.interval->second);

  CHECK(parse_scenario("thm9") == Scenario::thm9);
  CHECK_THROWS_AS(parse_scenario("thm11"), Error);
  CHECK_THROWS_AS(run_separation(Scenario::thm8, ParamSet{}), Error);
}
