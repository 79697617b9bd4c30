#include "oracle/oracle.hpp"

#include <bit>
#include <cstdint>

namespace kwise::oracle {

namespace {

int weight_of(std::uint32_t bits, int n) {
  const int ones = std::popcount(bits);
  return 2 * ones - n;
}

void check_size(int n) {
  if (n < 1 || n > 16) fail(ErrorCode::out_of_range, "oracle needs 1 <= n <= 16");
}

std::vector<long long> strings_per_weight(int n) {
  std::vector<long long> count(static_cast<std::size_t>(n) + 1, 0);
  for (std::uint32_t x = 0; x < (1u << n); ++x) ++count[static_cast<std::size_t>(std::popcount(x))];
  return count;
}

Rational ipow_rational(const Rational& b, int e) {
  Rational r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

// Solves a square system by Gaussian elimination; false when singular.
bool solve_square(std::vector<std::vector<Rational>> a, std::vector<Rational> b, std::vector<Rational>& x) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return false;
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const Rational f = a[r][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
      b[r] -= f * b[c];
    }
  }
  x.assign(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return true;
}

}  // namespace

std::vector<Rational> string_table(int n, const Masses& weight_law) {
  check_size(n);
  const auto count = strings_per_weight(n);
  std::vector<Rational> table(std::size_t{1} << n, Rational(0));
  for (std::uint32_t x = 0; x < (1u << n); ++x) {
    const int w = weight_of(x, n);
    const auto it = weight_law.find(w);
    if (it == weight_law.end()) continue;
    table[x] = it->second / count[static_cast<std::size_t>(std::popcount(x))];
  }
  return table;
}

Masses weight_law(int n, const std::vector<Rational>& table) {
  Masses out;
  for (std::uint32_t x = 0; x < table.size(); ++x) {
    if (table[x] != 0) out[weight_of(x, n)] += table[x];
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

Masses binomial(int n) {
  check_size(n);
  const Rational each(1, std::uint64_t{1} << n);
  Masses out;
  for (std::uint32_t x = 0; x < (1u << n); ++x) out[weight_of(x, n)] += each;
  return out;
}

std::vector<Rational> moments(int n, const Masses& law, int k) {
  const auto table = string_table(n, law);
  std::vector<Rational> out(static_cast<std::size_t>(k), Rational(0));
  for (std::uint32_t x = 0; x < table.size(); ++x) {
    if (table[x] == 0) continue;
    const Rational w(weight_of(x, n));
    Rational p = 1;
    for (int j = 1; j <= k; ++j) {
      p *= w;
      out[static_cast<std::size_t>(j - 1)] += table[x] * p;
    }
  }
  return out;
}

Rational tail(int n, const Masses& law, int t) {
  const auto table = string_table(n, law);
  Rational acc = 0;
  for (std::uint32_t x = 0; x < table.size(); ++x) {
    if (weight_of(x, n) >= t) acc += table[x];
  }
  return acc;
}

Rational interval(int n, const Masses& law, int a, int b) {
  const auto table = string_table(n, law);
  Rational acc = 0;
  for (std::uint32_t x = 0; x < table.size(); ++x) {
    const int w = weight_of(x, n);
    if (a <= w && w <= b) acc += table[x];
  }
  return acc;
}

Rational parity_bias(int n, const Masses& law, int ell) {
  const auto table = string_table(n, law);
  const std::uint32_t mask = ell >= 32 ? ~0u : ((1u << ell) - 1);
  Rational acc = 0;
  for (std::uint32_t x = 0; x < table.size(); ++x) {
    if (table[x] == 0) continue;
    const int minus = ell - std::popcount(x & mask);
    acc += (minus % 2 == 0) ? table[x] : Rational(-table[x]);
  }
  return acc;
}

Rational slice_bias(int n, int t, int ell) {
  check_size(n);
  long long total = 0;
  long long signed_sum = 0;
  const std::uint32_t mask = (1u << ell) - 1;
  for (std::uint32_t x = 0; x < (1u << n); ++x) {
    if (weight_of(x, n) != t) continue;
    ++total;
    signed_sum += ((ell - std::popcount(x & mask)) % 2 == 0) ? 1 : -1;
  }
  if (total == 0) fail(ErrorCode::out_of_range, "empty slice");
  return Rational(signed_sum, total);
}

std::vector<Rational> bias_by_generating_function(int n, const Masses& law) {
  if (n < 1) fail(ErrorCode::out_of_range, "oracle needs n >= 1");
  std::vector<BigInt> choose{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<BigInt> next(choose.size() + 1, BigInt(0));
    for (std::size_t j = 0; j < choose.size(); ++j) {
      next[j] += choose[j];
      next[j + 1] += choose[j];
    }
    choose = std::move(next);
  }
  std::vector<Rational> out(static_cast<std::size_t>(n) + 1, Rational(0));
  for (const auto& [w, p] : law) {
    const int minus = (n - w) / 2;
    std::vector<BigInt> poly{1};
    for (int i = 0; i < n; ++i) {
      const int sign = i < minus ? -1 : 1;
      std::vector<BigInt> next(poly.size() + 1, BigInt(0));
      for (std::size_t j = 0; j < poly.size(); ++j) {
        next[j] += poly[j];
        next[j + 1] += sign * poly[j];
      }
      poly = std::move(next);
    }
    for (int ell = 0; ell <= n; ++ell) {
      out[static_cast<std::size_t>(ell)] += p * Rational(poly[static_cast<std::size_t>(ell)], choose[static_cast<std::size_t>(ell)]);
    }
  }
  return out;
}

Masses smooth(int n, const Masses& law, const Rational& rho) {
  const auto table = string_table(n, law);
  const Rational flip = (1 - rho) / 2;
  std::vector<Rational> flip_pow(static_cast<std::size_t>(n) + 1);
  for (int d = 0; d <= n; ++d) flip_pow[static_cast<std::size_t>(d)] = ipow_rational(flip, d) * ipow_rational(1 - flip, n - d);
  std::vector<Rational> out(table.size(), Rational(0));
  for (std::uint32_t x = 0; x < table.size(); ++x) {
    if (table[x] == 0) continue;
    for (std::uint32_t y = 0; y < table.size(); ++y) {
      out[y] += table[x] * flip_pow[static_cast<std::size_t>(std::popcount(x ^ y))];
    }
  }
  return weight_law(n, out);
}

Masses replace_noise(int n, const Masses& law, int rounds) {
  auto table = string_table(n, law);
  const Rational each = Rational(1, 2 * n);
  for (int r = 0; r < rounds; ++r) {
    std::vector<Rational> next(table.size(), Rational(0));
    for (std::uint32_t x = 0; x < table.size(); ++x) {
      if (table[x] == 0) continue;
      for (int i = 0; i < n; ++i) {
        next[x | (1u << i)] += table[x] * each;
        next[x & ~(1u << i)] += table[x] * each;
      }
    }
    table = std::move(next);
  }
  return weight_law(n, table);
}

VertexOptimum extremal_by_vertices(int n, int k, int t, Objective objective) {
  check_size(n);
  std::vector<int> weights;
  for (int w = -n; w <= n; w += 2) weights.push_back(w);
  const auto uniform = binomial(n);
  std::vector<Rational> rhs{Rational(1)};
  for (const auto& m : moments(n, uniform, k)) rhs.push_back(m);
  const Rational base_tail = tail(n, uniform, t);

  auto score = [&](const Masses& law) -> Rational {
    Rational tail_mass = 0;
    for (const auto& [w, p] : law) {
      if (objective == Objective::point ? w == t : w >= t) tail_mass += p;
    }
    if (objective != Objective::signed_gap) return tail_mass;
    const Rational up = tail_mass - base_tail;
    return up < 0 ? Rational(-up) : up;
  };

  VertexOptimum best;
  const int size = k + 1;
  const int total = static_cast<int>(weights.size());
  if (size > total) return best;
  std::vector<int> pick(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) pick[static_cast<std::size_t>(i)] = i;
  while (true) {
    std::vector<std::vector<Rational>> a(static_cast<std::size_t>(size), std::vector<Rational>(static_cast<std::size_t>(size)));
    for (int j = 0; j < size; ++j) {
      for (int c = 0; c < size; ++c) a[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)] = ipow_rational(Rational(weights[static_cast<std::size_t>(pick[static_cast<std::size_t>(c)])]), j);
    }
    std::vector<Rational> x;
    if (solve_square(a, rhs, x)) {
      bool nonnegative = true;
      for (const auto& v : x) nonnegative = nonnegative && v >= 0;
      if (nonnegative) {
        Masses law;
        for (int c = 0; c < size; ++c) {
          if (x[static_cast<std::size_t>(c)] != 0) law[weights[static_cast<std::size_t>(pick[static_cast<std::size_t>(c)])]] = x[static_cast<std::size_t>(c)];
        }
        const Rational v = score(law);
        if (!best.feasible || v > best.value) {
          best.feasible = true;
          best.value = v;
          best.argmax = std::move(law);
        }
      }
    }
    int i = size - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == total - size + i) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < size; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
  return best;
}

}  // namespace kwise::oracle
