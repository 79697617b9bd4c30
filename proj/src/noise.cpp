#include "kwise/noise.hpp"

#include <map>

namespace kwise {

namespace {

void check_rho(const Rational& rho) {
  if (rho < 0 || rho > 1) fail(ErrorCode::out_of_range, "rho must lie in [0, 1]");
}

/// Bin(m, f) masses, index = number of successes.
std::vector<Rational> binomial_law(int m, const Rational& f) {
  std::vector<Rational> fp(static_cast<std::size_t>(m) + 1), gp(static_cast<std::size_t>(m) + 1);
  fp[0] = 1;
  gp[0] = 1;
  const Rational g = 1 - f;
  for (int i = 1; i <= m; ++i) {
    fp[i] = fp[i - 1] * f;
    gp[i] = gp[i - 1] * g;
  }
  std::vector<Rational> out(static_cast<std::size_t>(m) + 1);
  for (int i = 0; i <= m; ++i) out[i] = Rational(binomial(m, i)) * fp[i] * gp[m - i];
  return out;
}

}  // namespace

WeightPmf smooth(const WeightPmf& p, const Rational& rho) {
  check_rho(rho);
  const int n = p.n();
  const Rational flip = (1 - rho) / 2;
  if (flip == 0) return p;
  std::map<int, std::vector<Rational>> laws;
  auto law = [&](int m) -> const std::vector<Rational>& {
    auto it = laws.find(m);
    if (it == laws.end()) it = laws.emplace(m, binomial_law(m, flip)).first;
    return it->second;
  };
  std::map<int, Rational> out;
  for (const auto& [w, mass] : p.masses()) {
    const int plus = (n + w) / 2;
    const int minus = n - plus;
    const auto& fplus = law(plus);
    const auto& fminus = law(minus);
    for (int a = 0; a <= plus; ++a) {
      if (fplus[a] == 0) continue;
      const Rational left = mass * fplus[a];
      for (int b = 0; b <= minus; ++b) {
        if (fminus[b] == 0) continue;
        out[w - 2 * a + 2 * b] += left * fminus[b];
      }
    }
  }
  return WeightPmf(n, std::move(out));
}

WeightPmf replace_noise(const WeightPmf& p, int rounds) {
  if (rounds < 0) fail(ErrorCode::invalid_argument, "rounds must be nonnegative");
  const int n = p.n();
  std::map<int, Rational> cur = p.masses();
  const Rational half(1, 2);
  for (int r = 0; r < rounds; ++r) {
    std::map<int, Rational> next;
    for (const auto& [w, mass] : cur) {
      next[w] += mass * half;
      // A +1 coordinate is picked w.p. (n+w)/(2n), then becomes -1 w.p. 1/2.
      if (w > -n) next[w - 2] += mass * Rational(n + w, 4 * n);
      if (w < n) next[w + 2] += mass * Rational(n - w, 4 * n);
    }
    cur = std::move(next);
  }
  return WeightPmf(n, std::move(cur));
}

NoiseMoments noise_moments(int x_sign, const Rational& rho) {
  check_rho(rho);
  if (x_sign != 1 && x_sign != -1) fail(ErrorCode::invalid_argument, "x_sign must be +1 or -1");
  const Rational x(x_sign);
  NoiseMoments m;
  m.mean = rho * x;
  m.second = 1;
  m.third = rho * x;
  m.variance = 1 - rho * rho;
  m.third_central = -2 * rho * (1 - rho * rho) * x;
  return m;
}

Rational deviation_tail(int n, int w, const Rational& rho, const Rational& s) {
  const WeightPmf out = smooth(slice_pmf(n, w), rho);
  const Rational center = rho * w;
  Rational total = 0;
  for (const auto& [v, mass] : out.masses()) {
    if (abs(Rational(v) - center) >= s) total += mass;
  }
  return total;
}

}  // namespace kwise
