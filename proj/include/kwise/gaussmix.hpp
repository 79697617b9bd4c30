#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "kwise/matrix.hpp"
#include "kwise/numeric.hpp"
#include "kwise/polynomial.hpp"

namespace kwise::gaussmix {

/// k-component Gaussian mixture with a common variance.
struct GaussMixture {
  std::vector<Real> means;
  std::vector<Real> weights;
  Real variance = 1;

  int k() const { return static_cast<int>(means.size()); }
  /// Throws unless weights are nonnegative, sum to 1 within 1e-12, and
  /// variance > 0.
  void validate() const;
};

Real gaussian_pdf(const Real& x, const Real& mean, const Real& variance);
Real mixture_pdf(const GaussMixture& m, const Real& x);

inline constexpr double kDefaultRadius = 10.0;
inline constexpr double kDefaultStep = 1e-3;

struct SupDistance {
  Real distance;
  Real argmax;
};

/// max over the grid {-radius + i*step} of |phi(x) - mixture_pdf(x)|.
SupDistance sup_distance(const GaussMixture& m, double radius = kDefaultRadius, double step = kDefaultStep);

struct IntervalAdvantage {
  Real a;
  Real b;
  /// |Pr[N(0,1) in [a,b]] - Pr[M in [a,b]]| for the best scanned interval.
  Real advantage;
};

IntervalAdvantage interval_advantage(const GaussMixture& m, double radius = kDefaultRadius,
                                     double step = kDefaultStep);

struct FitOptions {
  int starts = 64;
  /// Objective evaluations per start.
  int budget = 4000;
  std::uint64_t seed = 1;
  int threads = 1;
  double radius = kDefaultRadius;
  double step = kDefaultStep;
};

struct FitResult {
  GaussMixture mixture;
  Real distance;
  bool budget_exhausted = false;
};

/// Multi-start Nelder-Mead over means and (softmax) weights, minimizing the
/// grid sup distance to the standard normal. Deterministic given the seed.
FitResult best_mixture_fit(int k, const Real& variance, const FitOptions& options = {});

/// Hankel matrix with entry (i, j) = f(i + j - k - 2), 1-based.
template <class T>
struct MkMatrix {
  int k = 0;
  Matrix<T> entries;
};

template <class T>
MkMatrix<T> mk_matrix(const std::function<T(int)>& f, int k) {
  if (k < 0) fail(ErrorCode::invalid_argument, "M_k needs k >= 0");
  MkMatrix<T> m{k, Matrix<T>(static_cast<std::size_t>(k) + 1, static_cast<std::size_t>(k) + 1)};
  for (int r = 0; r <= k; ++r) {
    for (int c = 0; c <= k; ++c) m.entries(r, c) = f(r + c - k);
  }
  return m;
}

Rational det_mk(const std::function<Rational(int)>& f, int k);
Real det_mk_real(const std::function<Real(int)>& f, int k);

/// x -> q^(x^2) on the integers, exactly.
Rational gaussian_power(const Rational& q, int x);

struct InverseEntryReport {
  int k = 0;
  Rational q;
  Matrix<Rational> inverse;
  Matrix<Rational> bound;
  /// max |A_ij| / bound_ij
  Rational worst_ratio;
  bool pass = false;
};

/// A = M_k(q^(x^2))^{-1}; checks |A_ij| <= C(k,i-1) C(k,j-1) / prod_{i<=k} (1 - q^(-2i)).
InverseEntryReport inverse_entry_bound_check(int k, const Rational& q);

/// Gaussian binomial [k choose i]_q from the generating function
/// prod_{j<k} (1 + q^j t) = sum_i q^(i(i-1)/2) [k choose i]_q t^i.
RationalPoly qbinomial(int k, int i);

/// Polynomial in q with a power-of-q offset: q^shift * poly(q).
struct LaurentPoly {
  int shift = 0;
  RationalPoly poly;
};

struct PowerCountEntry {
  int i = 0;
  int j = 0;
  LaurentPoly value;
  BigInt expected_count;
  BigInt coefficient_sum;
  bool nonnegative_integer_coefficients = false;
  bool pass = false;
};

struct PowerCountReport {
  int k = 0;
  std::vector<PowerCountEntry> entries;
  bool pass = false;
};

/// For V = Vand(1, q, ..., q^k), forms (-1)^(i+j) (V^-1)_ij prod_b (q^b - 1)
/// symbolically and checks it is a sum of C(k,i-1) C(k,j-1) powers of q.
PowerCountReport vandermonde_power_count_check(int k);

struct QuotientEntry {
  int i = 0;
  int j = 0;
  Rational quotient;
  Rational elementary;
  bool pass = false;
};

struct QuotientReport {
  std::vector<QuotientEntry> entries;
  bool pass = false;
};

/// det(X~_{j,i}) / det(X~_{k+1,i}) == e_{k+1-j}(nodes without x_{i-1}) for
/// X = Vand(nodes); throws on repeated nodes.
QuotientReport elementary_symmetric_quotient_check(const std::vector<Rational>& nodes);

Rational elementary_symmetric(const std::vector<Rational>& xs, int degree);

/// prod_{i=1}^k (1 - q^(-2i)) / (4^k (k+1)) with q = exp(D^2 alpha / k).
Real gapmiddle_lower(int k, const Real& d_half, const Real& alpha);

/// Lower bound on ||phi - g||_inf for any k-mixture g of variance sigma^2 < 1:
/// exp(-D^2 k / (2 sigma^2)) * gapmiddle_lower(k, D, alpha) / sqrt(2 pi),
/// alpha = 1/(2 sigma^2) - 1/2.
Real mixture_distance_lower_bound(int k, const Real& variance, const Real& d_half);

struct ExponentialFit {
  std::vector<Real> coefficients;
  std::vector<Real> rates;
  /// max_{x in -k..k} |q^(x^2) - sum_i a_i e^(b_i x)|
  Real sample_error;
};

/// Fits k exponentials to q^(x^2) on the 2k+1 sample points of M_k.
ExponentialFit fit_exponential_sum(int k, const Real& q, int starts = 32, std::uint64_t seed = 1, int budget = 6000);

Real exponential_sample_error(int k, const Real& q, const std::vector<Real>& coefficients,
                              const std::vector<Real>& rates);

struct CheckResult {
  bool hypothesis_ok = false;
  bool conclusion_ok = false;
  std::string detail;

  bool pass() const { return hypothesis_ok && conclusion_ok; }
};

/// Contrapositive form: if deg Q < 7 sqrt(m/L) then |Q(0)| <= (1/L) sum_{j=1}^m |Q(j)|.
CheckResult erdelyi_check(const RationalPoly& q, int m, const Rational& l);
/// If |p(i)| <= 1 on {0..m} and 3 d^2 <= m then |p| <= 3/2 on [0, m].
CheckResult coppersmith_check(const RationalPoly& p, int m);
/// If |p| <= 1 on [-1, 1] and s >= 1 then |p(s)| <= T_d(s) <= (2|s|)^d.
CheckResult chebyshev_extremal_check(const RationalPoly& p, const Rational& s);

RationalPoly chebyshev_t(int k);

struct SeriesCheck {
  Real partial_product;
  Real lower;     ///< partial product times (1 - tail bound)
  Real exp_bound; ///< exp(-pi^2 / (6 (1 - x)))
  int terms = 0;
  bool pass = false;
};

/// prod_{i>=1} (1 - x^i) >= exp(-pi^2 / (6 (1 - x))) for 0 <= x < 1.
SeriesCheck series_lower_check(const Real& x);

}  // namespace kwise::gaussmix
