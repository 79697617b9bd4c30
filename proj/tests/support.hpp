#pragma once

#include <random>

#include "kwise/numeric.hpp"
#include "kwise/weight_pmf.hpp"
#include "oracle/oracle.hpp"

namespace kwise::test {

inline Rational R(const char* text) { return parse_rational(text); }

inline oracle::Masses masses(const WeightPmf& p) { return {p.masses().begin(), p.masses().end()}; }

inline WeightPmf pmf(int n, std::initializer_list<std::pair<const int, Rational>> entries) {
  return WeightPmf(n, std::map<int, Rational>(entries));
}

/// Random exchangeable law on n coordinates: integer weights in [0, 9] on a
/// random subset of slices, normalized.
inline WeightPmf random_pmf(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> weight(0, 9);
  std::map<int, Rational> m;
  long long total = 0;
  for (int w = -n; w <= n; w += 2) {
    const int c = weight(rng) < 4 ? 0 : weight(rng) + 1;
    if (c == 0) continue;
    m[w] = c;
    total += c;
  }
  if (total == 0) {
    m[n] = 1;
    total = 1;
  }
  for (auto& [w, p] : m) p /= total;
  return WeightPmf(n, std::move(m));
}

}  // namespace kwise::test
