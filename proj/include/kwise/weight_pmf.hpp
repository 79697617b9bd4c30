#pragma once

#include <map>
#include <vector>

#include "kwise/numeric.hpp"

namespace kwise {

/// True iff -n <= w <= n and w has the parity of n.
bool admissible_weight(int n, int w);
/// All admissible weights of {-1,1}^n in increasing order.
std::vector<int> admissible_weights(int n);

/// Exact law of the Hamming weight (sum of +-1 coordinates) of an
/// exchangeable distribution on {-1,1}^n.
///
/// Keys are admissible weights, masses are strictly positive and sum to
/// exactly one. Construction validates all three invariants.
class WeightPmf {
 public:
  WeightPmf(int n, std::map<int, Rational> masses);

  int n() const noexcept { return n_; }
  const std::map<int, Rational>& masses() const noexcept { return masses_; }
  Rational mass(int w) const;
  std::vector<int> support() const;
  std::size_t support_size() const noexcept { return masses_.size(); }

  friend bool operator==(const WeightPmf&, const WeightPmf&) = default;

 private:
  int n_;
  std::map<int, Rational> masses_;
};

WeightPmf binomial_pmf(int n);
WeightPmf slice_pmf(int n, int t);

/// lambda * a + (1 - lambda) * b; requires equal dimensions.
WeightPmf mixture(const WeightPmf& a, const WeightPmf& b, const Rational& lambda);

/// E[W^j] for j = 1..k.
std::vector<Rational> moments(const WeightPmf& p, int k);
/// E[B^j] for j = 0..k under the centered binomial; these are integers.
std::vector<BigInt> binomial_moments(int n, int k);

bool is_k_uniform(const WeightPmf& p, int k);

/// Pr[W >= t].
Rational tail_mass(const WeightPmf& p, int t);
/// Pr[a <= W <= b]; zero when a > b.
Rational interval_mass(const WeightPmf& p, int a, int b);

/// Law of -W, i.e. of the coordinatewise negation.
WeightPmf complement(const WeightPmf& p);

}  // namespace kwise
