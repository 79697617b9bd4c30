#include <cmath>

#include "doctest.h"
#include "kwise/lp.hpp"
#include "kwise/noise.hpp"
#include "support.hpp"

using namespace kwise;
using kwise::test::R;

TEST_CASE("smooth examples") {
  std::mt19937_64 rng(3);
  for (int n = 1; n <= 9; ++n) {
    const auto p = test::random_pmf(n, rng);
    CHECK(smooth(p, Rational(1)) == p);
    CHECK(smooth(p, Rational(0)) == binomial_pmf(n));
  }
  CHECK(smooth(slice_pmf(1, 1), R("1/2")) == test::pmf(1, {{1, R("3/4")}, {-1, R("1/4")}}));
  CHECK_THROWS_AS(smooth(slice_pmf(1, 1), R("3/2")), Error);
  CHECK_THROWS_AS(smooth(slice_pmf(1, 1), R("-1/2")), Error);
}

TEST_CASE("replace_noise examples") {
  const auto p = slice_pmf(5, 3);
  CHECK(replace_noise(p, 0) == p);
  CHECK(replace_noise(slice_pmf(1, 1), 1) == test::pmf(1, {{1, R("1/2")}, {-1, R("1/2")}}));
  CHECK(replace_noise(slice_pmf(2, 2), 1) == test::pmf(2, {{2, R("1/2")}, {0, R("1/2")}}));
  CHECK_THROWS_AS(replace_noise(p, -1), Error);
}

TEST_CASE("noise_moments examples") {
  const auto a = noise_moments(1, Rational(1));
  CHECK(a.mean == 1);
  CHECK(a.second == 1);
  CHECK(a.third == 1);
  CHECK(a.variance == 0);
  CHECK(a.third_central == 0);
  const auto b = noise_moments(1, Rational(0));
  CHECK(b.mean == 0);
  CHECK(b.second == 1);
  CHECK(b.third == 0);
  CHECK(b.variance == 1);
  CHECK(b.third_central == 0);
  const auto c = noise_moments(1, R("1/2"));
  CHECK(c.variance == R("3/4"));
  CHECK(c.third_central == R("-3/4"));
  const auto d = noise_moments(-1, R("1/2"));
  CHECK(d.mean == R("-1/2"));
  CHECK(d.third_central == R("3/4"));
  CHECK_THROWS_AS(noise_moments(0, R("1/2")), Error);
}

TEST_CASE("kernels agree with string-space oracles for n <= 8") {
  std::mt19937_64 rng(17);
  for (int n = 1; n <= 8; ++n) {
    for (int rep = 0; rep < 3; ++rep) {
      const auto p = test::random_pmf(n, rng);
      for (const char* rho : {"0", "1/3", "1/2", "7/8", "1"}) {
        CHECK(test::masses(smooth(p, R(rho))) == oracle::smooth(n, test::masses(p), R(rho)));
      }
      for (int rounds = 0; rounds <= 3; ++rounds) {
        CHECK(test::masses(replace_noise(p, rounds)) == oracle::replace_noise(n, test::masses(p), rounds));
      }
    }
  }
}

TEST_CASE("smoothing composes multiplicatively for n <= 20") {
  std::mt19937_64 rng(23);
  for (int n = 1; n <= 20; n += 3) {
    const auto p = test::random_pmf(n, rng);
    for (const char* a : {"1/3", "1/2", "3/4"}) {
      for (const char* b : {"1/2", "2/5"}) CHECK(smooth(smooth(p, R(a)), R(b)) == smooth(p, R(a) * R(b)));
    }
  }
}

TEST_CASE("kernels preserve mass, scale the mean and commute with complement") {
  std::mt19937_64 rng(31);
  for (int n = 1; n <= 16; ++n) {
    const auto p = test::random_pmf(n, rng);
    for (const char* rho : {"0", "1/4", "2/3", "1"}) {
      const auto s = smooth(p, R(rho));
      CHECK(moments(s, 1)[0] == R(rho) * moments(p, 1)[0]);
      CHECK(complement(s) == smooth(complement(p), R(rho)));
    }
    for (int rounds = 0; rounds <= 2; ++rounds) {
      const auto r = replace_noise(p, rounds);
      CHECK(complement(r) == replace_noise(complement(p), rounds));
      for (int w : r.support()) CHECK(admissible_weight(n, w));
    }
  }
}

TEST_CASE("replace_noise keeps k-uniform laws k-uniform") {
  for (int n : {6, 11, 20}) {
    for (int k = 1; k <= 4; ++k) {
      const auto s = *construct_k_uniform(n, k).primal;
      for (int rounds = 0; rounds <= 3; ++rounds) CHECK(is_k_uniform(replace_noise(s, rounds), k));
    }
  }
}

TEST_CASE("deviation tail obeys the exponential shape with c = 1/8 for n <= 20") {
  for (int n = 1; n <= 20; ++n) {
    for (int w = -n; w <= n; w += 2) {
      for (const char* rho_text : {"1/4", "1/2", "3/4"}) {
        const Rational rho = R(rho_text);
        const double r = static_cast<double>(rho);
        for (int s = 1; s <= 2 * n; ++s) {
          const double exact = static_cast<double>(deviation_tail(n, w, rho, Rational(s)));
          const double shape = 2 * std::exp(-0.125 * s * s / ((1 - r * r) * n + s));
          CHECK(exact <= shape + 1e-12);
        }
      }
    }
  }
}
