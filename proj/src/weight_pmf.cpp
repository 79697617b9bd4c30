#include "kwise/weight_pmf.hpp"

#include <string>

namespace kwise {

bool admissible_weight(int n, int w) {
  return w >= -n && w <= n && ((n - w) % 2 == 0);
}

std::vector<int> admissible_weights(int n) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n) + 1);
  for (int w = -n; w <= n; w += 2) out.push_back(w);
  return out;
}

WeightPmf::WeightPmf(int n, std::map<int, Rational> masses) : n_(n) {
  if (n < 1) fail(ErrorCode::degenerate_input, "dimension must be positive");
  Rational total = 0;
  for (auto& [w, p] : masses) {
    if (!admissible_weight(n, w)) {
      fail(w < -n || w > n ? ErrorCode::out_of_range : ErrorCode::parity,
           "weight " + std::to_string(w) + " is not admissible for n=" + std::to_string(n));
    }
    if (p < 0) fail(ErrorCode::invalid_argument, "negative mass at weight " + std::to_string(w));
    total += p;
    if (p != 0) masses_.emplace(w, std::move(p));
  }
  if (total != 1) fail(ErrorCode::invalid_argument, "masses sum to " + to_string(total) + ", not 1");
}

Rational WeightPmf::mass(int w) const {
  auto it = masses_.find(w);
  return it == masses_.end() ? Rational(0) : it->second;
}

std::vector<int> WeightPmf::support() const {
  std::vector<int> out;
  out.reserve(masses_.size());
  for (const auto& [w, p] : masses_) out.push_back(w);
  return out;
}

WeightPmf binomial_pmf(int n) {
  if (n < 1) fail(ErrorCode::degenerate_input, "binomial_pmf needs n >= 1");
  const auto& row = pascal_row(n);
  BigInt denom = ipow(2, static_cast<unsigned>(n));
  std::map<int, Rational> m;
  for (int i = 0; i <= n; ++i) {
    // i coordinates equal to +1
    m.emplace(2 * i - n, Rational(row[i], denom));
  }
  return WeightPmf(n, std::move(m));
}

WeightPmf slice_pmf(int n, int t) {
  if (n < 1) fail(ErrorCode::degenerate_input, "slice_pmf needs n >= 1");
  if (t < -n || t > n) fail(ErrorCode::out_of_range, "slice weight outside [-n, n]");
  if ((n - t) % 2 != 0) fail(ErrorCode::parity, "slice weight has the wrong parity");
  return WeightPmf(n, {{t, Rational(1)}});
}

WeightPmf mixture(const WeightPmf& a, const WeightPmf& b, const Rational& lambda) {
  if (a.n() != b.n()) fail(ErrorCode::dimension_mismatch, "mixture of different dimensions");
  if (lambda < 0 || lambda > 1) fail(ErrorCode::out_of_range, "mixture weight outside [0,1]");
  std::map<int, Rational> m;
  for (const auto& [w, p] : a.masses()) m[w] += lambda * p;
  for (const auto& [w, p] : b.masses()) m[w] += (1 - lambda) * p;
  return WeightPmf(a.n(), std::move(m));
}

std::vector<Rational> moments(const WeightPmf& p, int k) {
  if (k < 1) fail(ErrorCode::invalid_argument, "moment order must be >= 1");
  std::vector<Rational> out(static_cast<std::size_t>(k), Rational(0));
  for (const auto& [w, mass] : p.masses()) {
    BigInt power = 1;
    for (int j = 0; j < k; ++j) {
      power *= w;
      out[j] += mass * power;
    }
  }
  return out;
}

std::vector<BigInt> binomial_moments(int n, int k) {
  const auto& row = pascal_row(n);
  std::vector<BigInt> sums(static_cast<std::size_t>(k) + 1, BigInt(0));
  for (int i = 0; i <= n; ++i) {
    BigInt w = 2 * i - n;
    BigInt power = 1;
    for (int j = 0; j <= k; ++j) {
      sums[j] += row[i] * power;
      power *= w;
    }
  }
  BigInt denom = ipow(2, static_cast<unsigned>(n));
  std::vector<BigInt> out;
  out.reserve(sums.size());
  for (auto& s : sums) {
    if (s % denom != 0) fail(ErrorCode::internal, "non-integral binomial moment");
    out.push_back(s / denom);
  }
  return out;
}

bool is_k_uniform(const WeightPmf& p, int k) {
  if (k < 0 || k > p.n()) fail(ErrorCode::out_of_range, "uniformity order outside [0, n]");
  if (k == 0) return true;
  auto m = moments(p, k);
  auto b = binomial_moments(p.n(), k);
  for (int j = 1; j <= k; ++j) {
    if (m[j - 1] != Rational(b[j])) return false;
  }
  return true;
}

Rational tail_mass(const WeightPmf& p, int t) {
  Rational s = 0;
  for (auto it = p.masses().lower_bound(t); it != p.masses().end(); ++it) s += it->second;
  return s;
}

Rational interval_mass(const WeightPmf& p, int a, int b) {
  if (a > b) return 0;
  Rational s = 0;
  for (auto it = p.masses().lower_bound(a); it != p.masses().end() && it->first <= b; ++it) {
    s += it->second;
  }
  return s;
}

WeightPmf complement(const WeightPmf& p) {
  std::map<int, Rational> m;
  for (const auto& [w, mass] : p.masses()) m.emplace(-w, mass);
  return WeightPmf(p.n(), std::move(m));
}

}  // namespace kwise
