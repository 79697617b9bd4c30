#pragma once

#include <vector>

#include "kwise/numeric.hpp"
#include "kwise/weight_pmf.hpp"

namespace kwise {

/// K_ell(j) = sum_i (-1)^i C(j,i) C(n-j, ell-i), by the explicit sum.
BigInt krawtchouk(int n, int ell, int j);

/// E[prod_{i in S} x_i] for x uniform on the weight-t slice and |S| = ell.
Rational slice_bias(int n, int t, int ell);

/// Parity bias as a function of parity size. Entry 0 is always 1.
struct BiasProfile {
  int n = 0;
  std::vector<Rational> biases;

  /// max_{1 <= ell <= k} |bias(ell)|
  Rational max_abs(int k) const;
};

BiasProfile bias_profile(const WeightPmf& p);

/// (ell/n + t^2/n^2)^(ell/2), an upper bound on |slice_bias(n, t, ell)|.
Real lemma13_bound(int n, int t, int ell);

}  // namespace kwise
