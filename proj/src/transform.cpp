#include "kwise/transform.hpp"

#include <algorithm>

#include "kwise/krawtchouk.hpp"
#include "kwise/lp.hpp"
#include "kwise/noise.hpp"

namespace kwise {

WeightPmf bu_to_sb(const WeightPmf& p, int k) {
  if (k < 2) fail(ErrorCode::precondition, "bu_to_sb needs k >= 2");
  if (k > p.n()) fail(ErrorCode::out_of_range, "k exceeds the dimension");
  if (!is_k_uniform(p, k)) fail(ErrorCode::precondition, "bu_to_sb input is not k-uniform");
  return replace_noise(sparsify(p, k), noise_rounds_for(k));
}

bool BiasCertificate::all_pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.pass; });
}

Rational BiasCertificate::max_abs_bias() const {
  Rational best = 0;
  for (const auto& r : rows) best = std::max(best, abs(r.bias));
  return best;
}

Real case2_bound(int n, int k) {
  return 2 * boost::multiprecision::pow(Real(2 * k) / n, Real(k) / 4);
}

Real case3_bound(int n, int k) {
  return boost::multiprecision::pow(Real(k) / n, Real(k) / 2);
}

Real case2_chain_bound(int n, int k, int ell) {
  const Real nn(n);
  const Real t = boost::multiprecision::pow(Real(k) * nn * nn * nn, Real(1) / 4);
  const Real t2 = t * t;
  auto slice_term = [&](int size) {
    return boost::multiprecision::pow(Real(size) / nn + t2 / (nn * nn), Real(size) / 2);
  };
  const Real slice = std::min(slice_term(ell), slice_term(n - ell));
  // Moment tail bound for a (2h)-uniform distribution, h = floor(k/2).
  const int h = k / 2;
  const Real tail = boost::multiprecision::sqrt(Real(2)) *
                    boost::multiprecision::pow(Real(2 * h) * nn / (e() * t2), Real(h));
  return slice + tail;
}

BiasCertificate certify_bias(const WeightPmf& q, int k) {
  const int n = q.n();
  if (k < 0 || k > n) fail(ErrorCode::out_of_range, "k outside [0, n]");
  const BiasProfile profile = bias_profile(q);
  const Real slack(kBiasSlack);
  BiasCertificate cert{n, k, {}};
  for (int ell = 1; ell <= n; ++ell) {
    BiasCertificateRow row;
    row.ell = ell;
    row.bias = profile.biases[ell];
    const Real magnitude = to_real(abs(row.bias));
    if (ell <= k) {
      row.case_id = 1;
      row.bound = 0;
      row.pass = row.bias == 0;
    } else if (ell <= n - k - 1) {
      row.case_id = 2;
      row.bound = case2_bound(n, k);
      row.chain_bound = case2_chain_bound(n, k, ell);
      row.pass = magnitude <= row.bound + slack && magnitude <= *row.chain_bound + slack;
    } else {
      row.case_id = 3;
      row.bound = case3_bound(n, k);
      row.pass = magnitude <= row.bound + slack;
    }
    cert.rows.push_back(std::move(row));
  }
  return cert;
}

std::optional<std::pair<int, int>> interval_property_violation(const WeightPmf& p, const WeightPmf& q, int k) {
  if (p.n() != q.n()) fail(ErrorCode::dimension_mismatch, "P and Q have different dimensions");
  const int n = p.n();
  const int lo = -n - k - 2;
  const int hi = n + k + 2;
  // cdf[x - lo] = Pr[W <= x]
  auto cdf = [&](const WeightPmf& d) {
    std::vector<Rational> c(static_cast<std::size_t>(hi - lo) + 1, Rational(0));
    Rational run = 0;
    for (int x = lo; x <= hi; ++x) {
      run += d.mass(x);
      c[x - lo] = run;
    }
    return c;
  };
  const auto cp = cdf(p);
  const auto cq = cdf(q);
  auto mass_in = [&](const std::vector<Rational>& c, int a, int b) {
    return c[b - lo] - c[a - 1 - lo];
  };
  const auto ws = admissible_weights(n);
  for (std::size_t i = 0; i < ws.size(); ++i) {
    for (std::size_t j = i; j < ws.size(); ++j) {
      const int a = ws[i];
      const int b = ws[j];
      if (mass_in(cq, a - k, b + k) < mass_in(cp, a, b)) return std::make_pair(a, b);
    }
  }
  return std::nullopt;
}

bool interval_property_check(const WeightPmf& p, const WeightPmf& q, int k) {
  return !interval_property_violation(p, q, k).has_value();
}

}  // namespace kwise
