#include "kwise/roots.hpp"

#include <algorithm>
#include <utility>

namespace kwise {

namespace {

std::vector<RationalPoly> sturm_chain(const RationalPoly& p) {
  std::vector<RationalPoly> chain{p, p.derivative()};
  while (!chain.back().is_zero()) {
    auto rem = chain[chain.size() - 2].divmod(chain.back()).second;
    chain.push_back(rem * Rational(-1));
  }
  chain.pop_back();
  return chain;
}

int sign_variations(const std::vector<RationalPoly>& chain, const Rational& x) {
  int variations = 0;
  int last = 0;
  for (const auto& q : chain) {
    const Rational v = q(x);
    const int s = v > 0 ? 1 : (v < 0 ? -1 : 0);
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

}  // namespace

std::vector<Rational> real_roots(const RationalPoly& p, const Rational& lo, const Rational& hi, const Rational& width) {
  if (p.is_zero()) fail(ErrorCode::invalid_argument, "real_roots of the zero polynomial");
  std::vector<Rational> roots;
  if (lo > hi || p.degree() == 0) return roots;
  const auto chain = sturm_chain(p);
  if (p(lo) == 0) roots.push_back(lo);
  // Each entry counts the distinct roots in (a, b].
  std::vector<std::pair<Rational, Rational>> work{{lo, hi}};
  while (!work.empty()) {
    auto [a, b] = work.back();
    work.pop_back();
    const int count = sign_variations(chain, a) - sign_variations(chain, b);
    if (count <= 0) continue;
    if (count == 1 && b - a < width) {
      roots.push_back(p(b) == 0 ? b : Rational((a + b) / 2));
      continue;
    }
    const Rational mid = (a + b) / 2;
    work.emplace_back(a, mid);
    work.emplace_back(mid, b);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

Real sup_abs(const RationalPoly& p, const Rational& lo, const Rational& hi) {
  Real best = std::max(to_real(abs(p(lo))), to_real(abs(p(hi))));
  const RationalPoly dp = p.derivative();
  if (dp.is_zero()) return best;
  for (const auto& x : real_roots(dp, lo, hi)) best = std::max(best, to_real(abs(p(x))));
  return best;
}

}  // namespace kwise
