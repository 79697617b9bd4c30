#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "kwise/numeric.hpp"
#include "kwise/weight_pmf.hpp"

namespace kwise {

/// Bounded-uniform to small-bias: sparsify to at most k+1 weights, then
/// floor(k/2) rounds of coordinate rerandomization. Output stays k-uniform.
WeightPmf bu_to_sb(const WeightPmf& p, int k);

/// Number of rerandomization rounds bu_to_sb applies.
inline int noise_rounds_for(int k) { return k / 2; }

struct BiasCertificateRow {
  int ell = 0;
  Rational bias;
  /// 1: ell <= k, 2: k < ell < n-k, 3: ell >= n-k
  int case_id = 0;
  Real bound;
  /// Case 2 only: slice bound at t = (k n^3)^(1/4) plus the moment tail term.
  std::optional<Real> chain_bound;
  bool pass = false;
};

struct BiasCertificate {
  int n = 0;
  int k = 0;
  std::vector<BiasCertificateRow> rows;

  bool all_pass() const;
  /// max |bias(ell)| over all ell >= 1.
  Rational max_abs_bias() const;
};

/// Tolerance when comparing an exact bias with an irrational bound.
inline constexpr double kBiasSlack = 1e-12;

BiasCertificate certify_bias(const WeightPmf& q, int k);

Real case2_bound(int n, int k);
Real case3_bound(int n, int k);
Real case2_chain_bound(int n, int k, int ell);

/// Checks Pr[Q in [a-k, b+k]] >= Pr[P in [a, b]] for every interval with
/// admissible endpoints. Returns the first violating interval, if any.
std::optional<std::pair<int, int>> interval_property_violation(const WeightPmf& p, const WeightPmf& q, int k);
bool interval_property_check(const WeightPmf& p, const WeightPmf& q, int k);

}  // namespace kwise
