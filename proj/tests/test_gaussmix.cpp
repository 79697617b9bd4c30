#include <cmath>

#include "doctest.h"
#include "kwise/gaussmix.hpp"
#include "support.hpp"

using namespace kwise;
using namespace kwise::gaussmix;
using kwise::test::R;

namespace {

GaussMixture single(const Real& mean, const Real& variance) { return GaussMixture{{mean}, {Real(1)}, variance}; }

// f(x) = sum_i c_i b_i^x on the integers, exactly.
std::function<Rational(int)> exponential_sum(std::vector<Rational> c, std::vector<Rational> b) {
  return [c = std::move(c), b = std::move(b)](int x) {
    Rational acc = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      const Rational p = pow(b[i], static_cast<unsigned>(std::abs(x)));
      acc += c[i] * (x < 0 ? Rational(1 / p) : p);
    }
    return acc;
  };
}

}  // namespace

TEST_CASE("sup_distance examples") {
  CHECK(sup_distance(single(0, 1)).distance == 0);
  const auto d = sup_distance(single(0, Real("0.75")));
  const double closed = (1 / std::sqrt(0.75) - 1) / std::sqrt(2 * M_PI);
  CHECK(std::abs(static_cast<double>(d.distance) - closed) < 1e-12);
  CHECK(abs(d.argmax) < Real("1e-9"));
  const auto sym = sup_distance(GaussMixture{{Real("-0.5"), Real("0.5")}, {Real("0.5"), Real("0.5")}, Real("0.75")});
  CHECK(sym.distance > 0);
  CHECK(abs(sym.distance - Real("0.0090029689559504151530656899")) < Real("1e-15"));
}

TEST_CASE("interval advantage of the identical mixture is zero") {
  CHECK(interval_advantage(single(0, 1)).advantage == 0);
  CHECK(interval_advantage(single(1, 1)).advantage > Real("0.3"));
}

TEST_CASE("mixture validation") {
  CHECK_THROWS_AS(GaussMixture({{Real(0)}, {Real("0.5")}, Real(1)}).validate(), Error);
  CHECK_THROWS_AS(GaussMixture({{Real(0)}, {Real(1)}, Real(0)}).validate(), Error);
  CHECK_THROWS_AS(GaussMixture({{Real(0), Real(1)}, {Real(1)}, Real(1)}).validate(), Error);
}

TEST_CASE("best_mixture_fit examples") {
  FitOptions o;
  o.starts = 8;
  CHECK(best_mixture_fit(1, Real(1), o).distance == 0);
  const auto f = best_mixture_fit(1, Real("0.75"), o);
  CHECK(f.distance <= Real("0.06172") + Real("1e-6"));
  for (int k = 1; k <= 3; ++k) CHECK(best_mixture_fit(k, Real("0.5"), o).distance > 0);
}

TEST_CASE("best_mixture_fit is deterministic across thread counts") {
  FitOptions one;
  one.starts = 6;
  one.budget = 800;
  FitOptions four = one;
  four.threads = 4;
  const auto a = best_mixture_fit(2, Real("0.6"), one);
  const auto b = best_mixture_fit(2, Real("0.6"), four);
  CHECK(a.distance == b.distance);
  CHECK(a.mixture.means == b.mixture.means);
}

TEST_CASE("M_k examples") {
  const auto m = mk_matrix(exponential_sum({3}, {2}), 1);
  CHECK(m.entries(0, 0) == R("3/2"));
  CHECK(m.entries(0, 1) == 3);
  CHECK(m.entries(1, 0) == 3);
  CHECK(m.entries(1, 1) == 6);
  CHECK(det_mk(exponential_sum({3}, {2}), 1) == 0);
  const auto g = [](int x) { return gaussian_power(Rational(2), x); };
  const auto mg = mk_matrix<Rational>(g, 1);
  CHECK(mg.entries(0, 0) == 2);
  CHECK(mg.entries(0, 1) == 1);
  CHECK(mg.entries(1, 1) == 2);
  CHECK(det_mk(g, 1) == 3);
  CHECK(det_mk(exponential_sum({R("1/3"), R("-5")}, {R("2"), R("7/2")}), 2) == 0);
}

TEST_CASE("M_k of short exponential sums is singular for k <= 6") {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<int> num(1, 9);
  std::uniform_int_distribution<int> coef(-9, 9);
  for (int k = 1; k <= 6; ++k) {
    for (int terms = 1; terms <= k; ++terms) {
      std::vector<Rational> c;
      std::vector<Rational> b;
      for (int i = 0; i < terms; ++i) {
        c.push_back(Rational(coef(rng), num(rng)));
        b.push_back(Rational(num(rng), num(rng)));
      }
      CHECK(det_mk(exponential_sum(c, b), k) == 0);
    }
  }
  // k + 1 distinct terms are generically nonsingular
  CHECK(det_mk(exponential_sum({1, 1}, {2, 3}), 1) != 0);
}

TEST_CASE("inverse entry bound examples") {
  const auto r = inverse_entry_bound_check(1, Rational(2));
  CHECK(r.pass);
  CHECK(r.inverse(0, 0) == R("2/3"));
  CHECK(r.inverse(0, 1) == R("-1/3"));
  CHECK(r.bound(0, 0) == R("4/3"));
  CHECK(inverse_entry_bound_check(2, Rational(2)).pass);
  const auto s = inverse_entry_bound_check(1, R("3/2"));
  CHECK(s.bound(0, 0) == R("9/5"));
  CHECK(s.pass);
  CHECK_THROWS_AS(inverse_entry_bound_check(1, Rational(1)), Error);
}

TEST_CASE("inverse entry bounds hold for k <= 6 and the inverse is exact") {
  for (int k = 1; k <= 6; ++k) {
    for (const char* q : {"3/2", "2", "3"}) {
      const auto r = inverse_entry_bound_check(k, R(q));
      CHECK(r.pass);
      const auto m = mk_matrix<Rational>([&](int x) { return gaussian_power(R(q), x); }, k);
      const auto size = static_cast<std::size_t>(k + 1);
      for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 0; j < size; ++j) {
          Rational acc = 0;
          for (std::size_t l = 0; l < size; ++l) acc += m.entries(i, l) * r.inverse(l, j);
          CHECK(acc == (i == j ? 1 : 0));
        }
      }
    }
  }
}

TEST_CASE("q-binomial examples and generating function") {
  CHECK(qbinomial(2, 1) == RationalPoly{1, 1});
  for (int k = 0; k <= 6; ++k) CHECK(qbinomial(k, 0) == RationalPoly{1});
  CHECK(qbinomial(4, 2) == RationalPoly{1, 1, 2, 1, 1});
  // prod_{j<k} (1 + q^j t) at q = 2, t = 3
  for (int k = 1; k <= 6; ++k) {
    Rational lhs = 1;
    for (int j = 0; j < k; ++j) lhs *= 1 + pow(Rational(2), static_cast<unsigned>(j)) * 3;
    Rational rhs = 0;
    for (int i = 0; i <= k; ++i) {
      rhs += pow(Rational(2), static_cast<unsigned>(i * (i - 1) / 2)) * qbinomial(k, i)(Rational(2)) *
             pow(Rational(3), static_cast<unsigned>(i));
    }
    CHECK(lhs == rhs);
    for (int i = 0; i <= k; ++i) CHECK(qbinomial(k, i)(Rational(1)) == Rational(binomial(k, i)));
  }
}

TEST_CASE("Vandermonde power count for k <= 5") {
  for (int k = 1; k <= 5; ++k) {
    const auto r = vandermonde_power_count_check(k);
    CHECK(r.pass);
    for (const auto& e : r.entries) {
      CHECK(e.coefficient_sum == e.expected_count);
      CHECK(e.nonnegative_integer_coefficients);
      CHECK(e.expected_count == binomial(k, e.i - 1) * binomial(k, e.j - 1));
    }
  }
}

TEST_CASE("elementary symmetric quotient") {
  const auto r = elementary_symmetric_quotient_check({1, 2, 3, 4});
  CHECK(r.pass);
  for (const auto& e : r.entries) {
    if (e.j == 4) CHECK(e.elementary == 1);
  }
  CHECK(elementary_symmetric({1, 2, 3}, 2) == 11);
  CHECK(elementary_symmetric({1, 2, 3}, 0) == 1);
  CHECK(elementary_symmetric_quotient_check({R("1/2"), R("-3"), R("5/7"), R("2")}).pass);
  CHECK_THROWS_AS(elementary_symmetric_quotient_check({1, 2, 2}), Error);
}

TEST_CASE("gapmiddle lower bound") {
  const Real g = gapmiddle_lower(1, 1, 1);
  CHECK(abs(g - Real((1 - std::exp(-2.0)) / 8)) < Real("1e-6"));
  CHECK(abs(g - (1 - exp(Real(-2))) / 8) < Real("1e-40"));
  Real previous = g;
  for (int k = 2; k <= 12; ++k) {
    const Real next = gapmiddle_lower(k, 1, 1);
    CHECK(next < previous);
    CHECK(next > 0);
    previous = next;
  }
  CHECK(gapmiddle_lower(1, 1, Real("1e-9")) < Real("1e-8"));
  CHECK(gapmiddle_lower(1, 1, Real("1e-9")) > 0);
  const Real m = mixture_distance_lower_bound(1, Real("0.25"), Real(1));
  CHECK(abs(m - exp(Real(-2)) * gapmiddle_lower(1, 1, Real("1.5")) / sqrt(2 * pi())) < Real("1e-40"));
}

TEST_CASE("fitted exponential sums stay above the lower bound at the sample points") {
  for (int k = 1; k <= 3; ++k) {
    const Real q = exp(Real(1) / k);
    const Real lower = gapmiddle_lower(k, 1, 1);
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      const auto fit = fit_exponential_sum(k, q, 8, seed);
      REQUIRE(fit.coefficients.size() == static_cast<std::size_t>(k));
      Real worst = 0;
      for (int x = -k; x <= k; ++x) {
        Real g = 0;
        for (int i = 0; i < k; ++i) g += fit.coefficients[static_cast<std::size_t>(i)] * exp(fit.rates[static_cast<std::size_t>(i)] * x);
        worst = std::max(worst, Real(abs(pow(q, x * x) - g)));
      }
      CHECK(abs(worst - fit.sample_error) < Real("1e-30"));
      CHECK(fit.sample_error > lower);
    }
  }
}

TEST_CASE("erdelyi check examples") {
  CHECK(erdelyi_check(RationalPoly{1}, 4, 2).pass());
  // Q(x) = 1 - x with m = L = 1: degree 1 < 7, yet |Q(0)| = 1 > |Q(1)| = 0.
  const auto bad = erdelyi_check(RationalPoly{1, -1}, 1, 1);
  CHECK(bad.hypothesis_ok);
  CHECK_FALSE(bad.conclusion_ok);
  const auto out_of_range = erdelyi_check(chebyshev_t(8), 4, 4);
  CHECK_FALSE(out_of_range.hypothesis_ok);
}

TEST_CASE("erdelyi checker agrees with direct evaluation on random instances") {
  std::mt19937_64 rng(2718);
  std::uniform_int_distribution<int> num(-20, 20);
  std::uniform_int_distribution<int> den(1, 10);
  std::uniform_int_distribution<int> mdist(8, 64);
  int failures = 0;
  for (int rep = 0; rep < 1000; ++rep) {
    const int m = mdist(rng);
    const Rational l(std::uniform_int_distribution<int>(4, 4 * m)(rng), 4);
    const int dmax = static_cast<int>(std::ceil(7 * std::sqrt(m / static_cast<double>(l)))) - 1;
    const int d = std::uniform_int_distribution<int>(0, std::max(0, std::min(8, dmax)))(rng);
    std::vector<Rational> c;
    for (int i = 0; i <= d; ++i) c.push_back(Rational(num(rng), den(rng)));
    const RationalPoly q(c);
    const auto r = erdelyi_check(q, m, l);
    Rational sum = 0;
    for (int j = 1; j <= m; ++j) sum += abs(q(Rational(j)));
    CHECK(r.conclusion_ok == (abs(q(Rational(0))) <= sum / l));
    CHECK(r.hypothesis_ok == (q.degree() < 7 * std::sqrt(m / static_cast<double>(l))));
    if (r.hypothesis_ok && !r.conclusion_ok) ++failures;
  }
  MESSAGE("erdelyi counterexamples among 1000 random instances: " << failures);
}

TEST_CASE("coppersmith check") {
  CHECK(coppersmith_check(RationalPoly{0, R("1/12")}, 12).pass());
  std::mt19937_64 rng(314);
  std::uniform_int_distribution<int> num(-20, 20);
  std::uniform_int_distribution<int> den(1, 10);
  for (int rep = 0; rep < 1000; ++rep) {
    const int d = std::uniform_int_distribution<int>(1, 4)(rng);
    const int m = 3 * d * d + std::uniform_int_distribution<int>(0, 20)(rng);
    std::vector<Rational> c;
    for (int i = 0; i <= d; ++i) c.push_back(Rational(num(rng), den(rng)));
    RationalPoly p(c);
    Rational peak = 0;
    for (int i = 0; i <= m; ++i) peak = std::max(peak, abs(p(Rational(i))));
    if (peak == 0) continue;
    p *= 1 / peak;
    const auto r = coppersmith_check(p, m);
    CHECK(r.hypothesis_ok);
    CHECK(r.conclusion_ok);
  }
}

TEST_CASE("chebyshev extremal check") {
  CHECK(chebyshev_t(2) == RationalPoly{-1, 0, 2});
  CHECK(chebyshev_t(2)(Rational(2)) == 7);
  CHECK(chebyshev_extremal_check(chebyshev_t(2), 2).pass());
  for (int k = 0; k <= 8; ++k) CHECK(chebyshev_extremal_check(chebyshev_t(k), R("3/2")).pass());
  CHECK_FALSE(chebyshev_extremal_check(RationalPoly{0, 2}, 2).hypothesis_ok);
}

TEST_CASE("series lower bound") {
  const auto half = series_lower_check(Real("0.5"));
  CHECK(half.pass);
  CHECK(abs(half.partial_product - Real("0.288788095086602421")) < Real("1e-15"));
  CHECK(abs(half.exp_bound - exp(-pi() * pi() / 3)) < Real("1e-40"));
  for (int i = 1; i <= 9; ++i) CHECK(series_lower_check(Real(i) / 10).pass);
}
