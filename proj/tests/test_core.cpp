#include "doctest.h"
#include "support.hpp"

using namespace kwise;
using kwise::test::R;

TEST_CASE("binomial_pmf small cases") {
  CHECK(binomial_pmf(1) == test::pmf(1, {{-1, R("1/2")}, {1, R("1/2")}}));
  CHECK(binomial_pmf(2) == test::pmf(2, {{-2, R("1/4")}, {0, R("1/2")}, {2, R("1/4")}}));
  CHECK(binomial_pmf(4).mass(2) == R("1/4"));
  CHECK_THROWS_AS(binomial_pmf(0), Error);
}

TEST_CASE("slice_pmf and parity errors") {
  CHECK(slice_pmf(2, 0) == test::pmf(2, {{0, R("1")}}));
  CHECK(slice_pmf(3, 1) == test::pmf(3, {{1, R("1")}}));
  try {
    slice_pmf(2, 1);
    FAIL("expected a parity error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::parity);
  }
  CHECK_THROWS_AS(slice_pmf(2, 4), Error);
}

TEST_CASE("WeightPmf rejects malformed masses") {
  CHECK_THROWS_AS(test::pmf(2, {{0, R("1/2")}}), Error);
  CHECK_THROWS_AS(test::pmf(2, {{1, R("1")}}), Error);
  CHECK_THROWS_AS(test::pmf(2, {{0, R("3/2")}, {2, R("-1/2")}}), Error);
  const auto p = test::pmf(2, {{0, R("1")}, {2, R("0")}});
  CHECK(p.support_size() == 1);
}

TEST_CASE("moments examples") {
  CHECK(moments(binomial_pmf(2), 2) == std::vector<Rational>{0, 2});
  CHECK(moments(slice_pmf(2, 0), 2) == std::vector<Rational>{0, 0});
  CHECK(moments(binomial_pmf(4), 4) == std::vector<Rational>{0, 4, 0, 40});
}

TEST_CASE("is_k_uniform examples") {
  CHECK(is_k_uniform(binomial_pmf(6), 6));
  CHECK(is_k_uniform(slice_pmf(2, 0), 1));
  CHECK_FALSE(is_k_uniform(slice_pmf(2, 0), 2));
}

TEST_CASE("tail and interval examples") {
  CHECK(tail_mass(binomial_pmf(4), 2) == R("5/16"));
  CHECK(tail_mass(binomial_pmf(4), -4) == 1);
  CHECK(tail_mass(binomial_pmf(4), 6) == 0);
  CHECK(interval_mass(binomial_pmf(4), -2, 2) == R("14/16"));
  CHECK(interval_mass(binomial_pmf(4), 3, 1) == 0);
}

TEST_CASE("complement examples") {
  for (int n = 1; n <= 8; ++n) CHECK(complement(binomial_pmf(n)) == binomial_pmf(n));
  CHECK(complement(slice_pmf(3, 1)) == slice_pmf(3, -1));
  std::mt19937_64 rng(7);
  for (int i = 0; i < 20; ++i) {
    const auto p = test::random_pmf(7, rng);
    CHECK(complement(complement(p)) == p);
  }
}

TEST_CASE("mixture is exact and validated") {
  const auto m = mixture(slice_pmf(2, 2), slice_pmf(2, -2), R("1/2"));
  CHECK(moments(m, 2) == std::vector<Rational>{0, 4});
  CHECK_THROWS_AS(mixture(slice_pmf(2, 2), slice_pmf(4, 0), R("1/2")), Error);
  CHECK_THROWS_AS(mixture(slice_pmf(2, 2), slice_pmf(2, 0), R("3/2")), Error);
}

TEST_CASE("binomial moments match the PMF moments") {
  for (int n = 1; n <= 30; ++n) {
    const auto exact = binomial_moments(n, 6);
    CHECK(exact.front() == 1);
    const auto direct = moments(binomial_pmf(n), 6);
    for (int j = 0; j < 6; ++j) CHECK(Rational(exact[static_cast<std::size_t>(j) + 1]) == direct[static_cast<std::size_t>(j)]);
  }
}

TEST_CASE("core operations agree with the string-space oracle for n <= 12") {
  std::mt19937_64 rng(2024);
  for (int n = 1; n <= 12; ++n) {
    for (int rep = 0; rep < 4; ++rep) {
      const auto p = rep == 0 ? binomial_pmf(n) : test::random_pmf(n, rng);
      const auto law = test::masses(p);
      CHECK(oracle::moments(n, law, 4) == moments(p, 4));
      for (int t = -n - 1; t <= n + 1; ++t) {
        CHECK(oracle::tail(n, law, t) == tail_mass(p, t));
        CHECK(oracle::interval(n, law, t, t + 3) == interval_mass(p, t, t + 3));
      }
      CHECK(test::masses(binomial_pmf(n)) == oracle::binomial(n));
    }
  }
}

TEST_CASE("tail plus lower interval is one") {
  std::mt19937_64 rng(11);
  for (int n = 1; n <= 20; ++n) {
    const auto p = test::random_pmf(n, rng);
    for (int t = -n; t <= n; t += 2) CHECK(tail_mass(p, t) + interval_mass(p, -n, t - 2) == 1);
  }
}

TEST_CASE("complement preserves k-uniformity for n <= 10") {
  std::mt19937_64 rng(5);
  for (int n = 1; n <= 10; ++n) {
    for (int rep = 0; rep < 6; ++rep) {
      const auto p = rep == 0 ? binomial_pmf(n) : test::random_pmf(n, rng);
      const auto q = complement(p);
      for (int k = 0; k <= n; ++k) CHECK(is_k_uniform(p, k) == is_k_uniform(q, k));
    }
  }
}

TEST_CASE("rational parsing and printing") {
  CHECK(to_string(R("2/4")) == "1/2");
  CHECK(to_string(R("3")) == "3/1");
  CHECK(R("0.25") == Rational(1, 4));
  CHECK(R("-7/21") == Rational(-1, 3));
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(5, 7) == 0);
}
