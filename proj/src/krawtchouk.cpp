#include "kwise/krawtchouk.hpp"

#include <algorithm>

namespace kwise {

BigInt krawtchouk(int n, int ell, int j) {
  if (ell < 0 || ell > n || j < 0 || j > n) fail(ErrorCode::out_of_range, "krawtchouk index out of range");
  BigInt sum = 0;
  const int lo = std::max(0, ell - (n - j));
  const int hi = std::min(ell, j);
  for (int i = lo; i <= hi; ++i) {
    BigInt term = binomial(j, i) * binomial(n - j, ell - i);
    if (i % 2) sum -= term;
    else sum += term;
  }
  return sum;
}

Rational slice_bias(int n, int t, int ell) {
  if (n < 1) fail(ErrorCode::degenerate_input, "slice_bias needs n >= 1");
  if (t < -n || t > n) fail(ErrorCode::out_of_range, "slice weight outside [-n, n]");
  if ((n - t) % 2 != 0) fail(ErrorCode::parity, "slice weight has the wrong parity");
  if (ell < 0 || ell > n) fail(ErrorCode::out_of_range, "parity size outside [0, n]");
  // j = number of -1 coordinates
  const int j = (n - t) / 2;
  return Rational(krawtchouk(n, ell, j), binomial(n, ell));
}

Rational BiasProfile::max_abs(int k) const {
  Rational best = 0;
  for (int ell = 1; ell <= k && ell < static_cast<int>(biases.size()); ++ell) {
    best = std::max(best, abs(biases[ell]));
  }
  return best;
}

BiasProfile bias_profile(const WeightPmf& p) {
  const int n = p.n();
  BiasProfile out{n, std::vector<Rational>(static_cast<std::size_t>(n) + 1, Rational(0))};
  for (int ell = 0; ell <= n; ++ell) {
    // Accumulate over a common denominator C(n, ell).
    Rational acc = 0;
    for (const auto& [w, mass] : p.masses()) acc += mass * krawtchouk(n, ell, (n - w) / 2);
    out.biases[ell] = acc / binomial(n, ell);
  }
  return out;
}

Real lemma13_bound(int n, int t, int ell) {
  if (ell < 0 || ell > n) fail(ErrorCode::out_of_range, "parity size outside [0, n]");
  const Real nn(n);
  const Real base = Real(ell) / nn + Real(t) * Real(t) / (nn * nn);
  return boost::multiprecision::pow(base, Real(ell) / 2);
}

}  // namespace kwise
