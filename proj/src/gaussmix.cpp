#include "kwise/gaussmix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include <boost/math/special_functions/erf.hpp>

#include "kwise/roots.hpp"

namespace kwise::gaussmix {

namespace {

constexpr double kInvSqrt2Pi = 0.3989422804014327;

std::vector<Real> grid(double radius, double step) {
  if (!(step > 0)) fail(ErrorCode::invalid_argument, "grid step must be positive");
  if (!(radius >= 0)) fail(ErrorCode::invalid_argument, "grid radius must be nonnegative");
  const auto count = static_cast<long>(std::floor(2 * radius / step + 1e-9));
  std::vector<Real> xs;
  xs.reserve(static_cast<std::size_t>(count) + 1);
  const Real r(radius);
  const Real h(step);
  for (long i = 0; i <= count; ++i) xs.push_back(-r + h * i);
  return xs;
}

Real normal_cdf(const Real& x, const Real& mean, const Real& variance) {
  using boost::multiprecision::sqrt;
  return boost::math::erfc(Real(-(x - mean) / sqrt(2 * variance))) / 2;
}

Real mixture_cdf(const GaussMixture& m, const Real& x) {
  Real acc = 0;
  for (int i = 0; i < m.k(); ++i) acc += m.weights[i] * normal_cdf(x, m.means[i], m.variance);
  return acc;
}

// Derivative-free minimizer over R^d in double precision.
struct NelderMeadResult {
  std::vector<double> x;
  double value = 0;
  int evaluations = 0;
  bool exhausted = false;
};

template <class F>
NelderMeadResult nelder_mead(F&& f, std::vector<double> start, double scale, int budget) {
  const std::size_t d = start.size();
  NelderMeadResult out;
  if (d == 0) {
    out.x = start;
    out.value = f(start);
    out.evaluations = 1;
    return out;
  }
  std::vector<std::vector<double>> simplex(d + 1, start);
  for (std::size_t i = 0; i < d; ++i) simplex[i + 1][i] += scale;
  std::vector<double> values(d + 1);
  int evals = 0;
  auto eval = [&](const std::vector<double>& x) {
    ++evals;
    return f(x);
  };
  for (std::size_t i = 0; i <= d; ++i) values[i] = eval(simplex[i]);

  std::vector<std::size_t> order(d + 1);
  while (true) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return values[a] < values[b]; });
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t second = order[d - 1];

    double spread = 0;
    for (std::size_t i = 0; i <= d; ++i) {
      for (std::size_t j = 0; j < d; ++j) spread = std::max(spread, std::abs(simplex[i][j] - simplex[best][j]));
    }
    if (spread < 1e-10 || values[worst] - values[best] < 1e-15) break;
    if (evals >= budget) {
      out.exhausted = true;
      break;
    }

    std::vector<double> centroid(d, 0.0);
    for (std::size_t i = 0; i <= d; ++i) {
      if (i == worst) continue;
      for (std::size_t j = 0; j < d; ++j) centroid[j] += simplex[i][j] / static_cast<double>(d);
    }
    auto along = [&](double t) {
      std::vector<double> x(d);
      for (std::size_t j = 0; j < d; ++j) x[j] = centroid[j] + t * (simplex[worst][j] - centroid[j]);
      return x;
    };

    auto reflected = along(-1.0);
    const double fr = eval(reflected);
    if (fr < values[best]) {
      auto expanded = along(-2.0);
      const double fe = eval(expanded);
      if (fe < fr) {
        simplex[worst] = std::move(expanded);
        values[worst] = fe;
      } else {
        simplex[worst] = std::move(reflected);
        values[worst] = fr;
      }
    } else if (fr < values[second]) {
      simplex[worst] = std::move(reflected);
      values[worst] = fr;
    } else {
      const bool outside = fr < values[worst];
      auto contracted = along(outside ? -0.5 : 0.5);
      const double fc = eval(contracted);
      if (fc < (outside ? fr : values[worst])) {
        simplex[worst] = std::move(contracted);
        values[worst] = fc;
      } else {
        for (std::size_t i = 0; i <= d; ++i) {
          if (i == best) continue;
          for (std::size_t j = 0; j < d; ++j) simplex[i][j] = simplex[best][j] + 0.5 * (simplex[i][j] - simplex[best][j]);
          values[i] = eval(simplex[i]);
        }
      }
    }
  }
  const auto it = std::min_element(values.begin(), values.end());
  out.x = simplex[static_cast<std::size_t>(it - values.begin())];
  out.value = *it;
  out.evaluations = evals;
  return out;
}

// Runs `starts` independent jobs over `threads` workers; job i writes slot i.
template <class Job>
void run_parallel(int starts, int threads, Job&& job) {
  threads = std::max(1, std::min(threads, starts));
  if (threads == 1) {
    for (int i = 0; i < starts; ++i) job(i);
    return;
  }
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (int i = t; i < starts; i += threads) job(i);
    });
  }
  for (auto& th : pool) th.join();
}

// Parameter vector: k means followed by k-1 weight logits (last logit fixed at 0).
void decode(const std::vector<double>& x, int k, std::vector<double>& means, std::vector<double>& weights) {
  means.assign(x.begin(), x.begin() + k);
  weights.assign(static_cast<std::size_t>(k), 0.0);
  double top = 0;
  for (int i = 0; i + 1 < k; ++i) top = std::max(top, x[static_cast<std::size_t>(k + i)]);
  double total = 0;
  for (int i = 0; i < k; ++i) {
    const double logit = i + 1 < k ? x[static_cast<std::size_t>(k + i)] : 0.0;
    weights[static_cast<std::size_t>(i)] = std::exp(logit - top);
    total += weights[static_cast<std::size_t>(i)];
  }
  for (auto& w : weights) w /= total;
}

double sup_distance_double(const std::vector<double>& means, const std::vector<double>& weights, double variance,
                           double radius, double step) {
  const double sd = std::sqrt(variance);
  const auto count = static_cast<long>(std::floor(2 * radius / step + 1e-9));
  double best = 0;
  for (long i = 0; i <= count; ++i) {
    const double x = -radius + step * static_cast<double>(i);
    double mix = 0;
    for (std::size_t c = 0; c < means.size(); ++c) {
      const double z = (x - means[c]) / sd;
      mix += weights[c] * std::exp(-0.5 * z * z);
    }
    mix *= kInvSqrt2Pi / sd;
    best = std::max(best, std::abs(kInvSqrt2Pi * std::exp(-0.5 * x * x) - mix));
  }
  return best;
}

}  // namespace

void GaussMixture::validate() const {
  if (means.empty()) fail(ErrorCode::invalid_argument, "mixture needs at least one component");
  if (means.size() != weights.size()) fail(ErrorCode::dimension_mismatch, "means and weights differ in length");
  if (!(variance > 0)) fail(ErrorCode::out_of_range, "mixture variance must be positive");
  Real total = 0;
  for (const auto& w : weights) {
    if (w < 0) fail(ErrorCode::out_of_range, "mixture weights must be nonnegative");
    total += w;
  }
  if (abs(total - 1) > Real(1e-12)) fail(ErrorCode::invalid_argument, "mixture weights must sum to 1");
}

Real gaussian_pdf(const Real& x, const Real& mean, const Real& variance) {
  using boost::multiprecision::exp;
  using boost::multiprecision::sqrt;
  const Real z = x - mean;
  return exp(-z * z / (2 * variance)) / sqrt(2 * pi() * variance);
}

Real mixture_pdf(const GaussMixture& m, const Real& x) {
  Real acc = 0;
  for (int i = 0; i < m.k(); ++i) acc += m.weights[i] * gaussian_pdf(x, m.means[i], m.variance);
  return acc;
}

SupDistance sup_distance(const GaussMixture& m, double radius, double step) {
  m.validate();
  SupDistance out{Real(0), Real(0)};
  bool first = true;
  for (const auto& x : grid(radius, step)) {
    const Real d = abs(gaussian_pdf(x, 0, 1) - mixture_pdf(m, x));
    if (first || d > out.distance) {
      out = {d, x};
      first = false;
    }
  }
  return out;
}

IntervalAdvantage interval_advantage(const GaussMixture& m, double radius, double step) {
  m.validate();
  const auto xs = grid(radius, step);
  std::size_t lo = 0;
  std::size_t hi = 0;
  std::vector<Real> h(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    h[i] = normal_cdf(xs[i], 0, 1) - mixture_cdf(m, xs[i]);
    if (h[i] < h[lo]) lo = i;
    if (h[i] > h[hi]) hi = i;
  }
  const auto [a, b] = std::minmax(lo, hi);
  return {xs[a], xs[b], Real(h[hi] - h[lo])};
}

FitResult best_mixture_fit(int k, const Real& variance, const FitOptions& options) {
  if (k < 1) fail(ErrorCode::invalid_argument, "mixture fit needs k >= 1");
  if (!(variance > 0) || variance > 1) fail(ErrorCode::out_of_range, "variance must lie in (0, 1]");
  if (options.starts < 1 || options.budget < 1) fail(ErrorCode::invalid_argument, "starts and budget must be positive");
  const double var = static_cast<double>(variance);
  const double coarse = std::max(options.step, 0.01);
  const std::size_t dim = static_cast<std::size_t>(2 * k - 1);

  std::vector<NelderMeadResult> runs(static_cast<std::size_t>(options.starts));
  run_parallel(options.starts, options.threads, [&](int s) {
    std::vector<double> start(dim, 0.0);
    if (s > 0) {
      std::seed_seq seq{static_cast<std::uint64_t>(options.seed), static_cast<std::uint64_t>(s)};
      std::mt19937_64 rng(seq);
      std::uniform_real_distribution<double> mean_dist(-2.0, 2.0);
      std::normal_distribution<double> logit_dist(0.0, 1.0);
      for (int i = 0; i < k; ++i) start[static_cast<std::size_t>(i)] = mean_dist(rng);
      for (std::size_t i = static_cast<std::size_t>(k); i < dim; ++i) start[i] = logit_dist(rng);
    }
    std::vector<double> means;
    std::vector<double> weights;
    auto objective = [&](const std::vector<double>& x) {
      decode(x, k, means, weights);
      return sup_distance_double(means, weights, var, options.radius, coarse);
    };
    auto run = nelder_mead(objective, start, 0.5, options.budget);
    decode(run.x, k, means, weights);
    run.value = sup_distance_double(means, weights, var, options.radius, options.step);
    decode(start, k, means, weights);
    const double at_start = sup_distance_double(means, weights, var, options.radius, options.step);
    if (at_start < run.value) {
      run.x = start;
      run.value = at_start;
    }
    runs[static_cast<std::size_t>(s)] = std::move(run);
  });

  std::size_t best = 0;
  for (std::size_t s = 1; s < runs.size(); ++s) {
    if (runs[s].value < runs[best].value) best = s;
  }
  std::vector<double> means;
  std::vector<double> weights;
  decode(runs[best].x, k, means, weights);
  FitResult out;
  out.mixture.variance = variance;
  for (int i = 0; i < k; ++i) {
    out.mixture.means.emplace_back(means[static_cast<std::size_t>(i)]);
    out.mixture.weights.emplace_back(weights[static_cast<std::size_t>(i)]);
  }
  Real total = std::accumulate(out.mixture.weights.begin(), out.mixture.weights.end(), Real(0));
  for (auto& w : out.mixture.weights) w /= total;
  out.distance = sup_distance(out.mixture, options.radius, options.step).distance;
  out.budget_exhausted = runs[best].exhausted;
  return out;
}

Rational det_mk(const std::function<Rational(int)>& f, int k) {
  return determinant(mk_matrix<Rational>(f, k).entries);
}

Real det_mk_real(const std::function<Real(int)>& f, int k) {
  return bareiss_determinant(mk_matrix<Real>(f, k).entries, [](const Real& a, const Real& b) { return Real(a / b); });
}

Rational gaussian_power(const Rational& q, int x) {
  return pow(q, static_cast<unsigned>(x * x));
}

InverseEntryReport inverse_entry_bound_check(int k, const Rational& q) {
  if (k < 1) fail(ErrorCode::invalid_argument, "inverse bound needs k >= 1");
  if (q <= 1) fail(ErrorCode::out_of_range, "inverse bound needs q > 1");
  InverseEntryReport out;
  out.k = k;
  out.q = q;
  out.inverse = inverse(mk_matrix<Rational>([&](int x) { return gaussian_power(q, x); }, k).entries);
  Rational denom = 1;
  for (int i = 1; i <= k; ++i) denom *= 1 - pow(Rational(1) / q, static_cast<unsigned>(2 * i));
  const auto n = static_cast<std::size_t>(k) + 1;
  out.bound = Matrix<Rational>(n, n);
  out.worst_ratio = 0;
  out.pass = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Rational b = Rational(binomial(k, static_cast<int>(i)) * binomial(k, static_cast<int>(j))) / denom;
      out.bound(i, j) = b;
      const Rational ratio = abs(out.inverse(i, j)) / b;
      out.worst_ratio = std::max(out.worst_ratio, ratio);
      if (ratio > 1) out.pass = false;
    }
  }
  return out;
}

RationalPoly qbinomial(int k, int i) {
  if (k < 0 || i < 0 || i > k) fail(ErrorCode::out_of_range, "qbinomial needs 0 <= i <= k");
  // coeff[t] is the q-polynomial multiplying t^t in prod_{j<k} (1 + q^j t).
  std::vector<RationalPoly> coeff{RationalPoly::constant(1)};
  for (int j = 0; j < k; ++j) {
    std::vector<RationalPoly> next(coeff.size() + 1);
    const auto qj = RationalPoly::monomial(static_cast<std::size_t>(j));
    for (std::size_t t = 0; t < coeff.size(); ++t) {
      next[t] += coeff[t];
      next[t + 1] += coeff[t] * qj;
    }
    coeff = std::move(next);
  }
  const auto shift = static_cast<std::size_t>(i * (i - 1) / 2);
  const auto& c = coeff[static_cast<std::size_t>(i)].coefficients();
  for (std::size_t p = 0; p < std::min(shift, c.size()); ++p) {
    if (c[p] != 0) fail(ErrorCode::internal, "generating function not divisible by the q shift");
  }
  return RationalPoly(std::vector<Rational>(c.begin() + static_cast<long>(std::min(shift, c.size())), c.end()));
}

namespace {

int low_order(const RationalPoly& p) {
  int s = 0;
  while (p.coefficient(static_cast<std::size_t>(s)) == 0) ++s;
  return s;
}

RationalPoly drop_low(const RationalPoly& p, int s) {
  const auto& c = p.coefficients();
  return RationalPoly(std::vector<Rational>(c.begin() + s, c.end()));
}

RationalPoly exact_quotient(const RationalPoly& a, const RationalPoly& b) {
  auto [quo, rem] = a.divmod(b);
  if (!rem.is_zero()) fail(ErrorCode::internal, "polynomial division left a remainder");
  return quo;
}

RationalPoly poly_det(const Matrix<RationalPoly>& m) {
  return bareiss_determinant(m, [](const RationalPoly& a, const RationalPoly& b) { return exact_quotient(a, b); });
}

}  // namespace

PowerCountReport vandermonde_power_count_check(int k) {
  if (k < 1) fail(ErrorCode::invalid_argument, "power count needs k >= 1");
  const auto n = static_cast<std::size_t>(k) + 1;
  Matrix<RationalPoly> v(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) v(r, c) = RationalPoly::monomial(r * c);
  }
  const RationalPoly det_v = poly_det(v);
  RationalPoly factor = RationalPoly::constant(1);
  for (int b = 1; b <= k; ++b) factor = factor * (RationalPoly::monomial(static_cast<std::size_t>(b)) - RationalPoly::constant(1));

  PowerCountReport out;
  out.k = k;
  out.pass = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // (-1)^(i+j) (V^-1)_ij = det(V without row j, column i) / det V
      const RationalPoly num = poly_det(v.minor(j, i)) * factor;
      PowerCountEntry e;
      e.i = static_cast<int>(i) + 1;
      e.j = static_cast<int>(j) + 1;
      e.expected_count = binomial(k, static_cast<int>(i)) * binomial(k, static_cast<int>(j));
      const int sn = low_order(num);
      const int sd = low_order(det_v);
      e.value.shift = sn - sd;
      e.value.poly = exact_quotient(drop_low(num, sn), drop_low(det_v, sd));
      e.coefficient_sum = 0;
      e.nonnegative_integer_coefficients = true;
      for (const auto& c : e.value.poly.coefficients()) {
        if (c < 0 || denominator(c) != 1) e.nonnegative_integer_coefficients = false;
        else e.coefficient_sum += numerator(c);
      }
      e.pass = e.nonnegative_integer_coefficients && e.coefficient_sum == e.expected_count;
      out.pass = out.pass && e.pass;
      out.entries.push_back(std::move(e));
    }
  }
  return out;
}

Rational elementary_symmetric(const std::vector<Rational>& xs, int degree) {
  if (degree < 0 || degree > static_cast<int>(xs.size())) return 0;
  std::vector<Rational> e(static_cast<std::size_t>(degree) + 1, Rational(0));
  e[0] = 1;
  for (const auto& x : xs) {
    for (int d = degree; d >= 1; --d) e[static_cast<std::size_t>(d)] += x * e[static_cast<std::size_t>(d - 1)];
  }
  return e[static_cast<std::size_t>(degree)];
}

QuotientReport elementary_symmetric_quotient_check(const std::vector<Rational>& nodes) {
  if (nodes.size() < 2) fail(ErrorCode::invalid_argument, "quotient check needs at least two nodes");
  for (std::size_t a = 0; a < nodes.size(); ++a) {
    for (std::size_t b = a + 1; b < nodes.size(); ++b) {
      if (nodes[a] == nodes[b]) fail(ErrorCode::degenerate_input, "Vandermonde nodes must be distinct");
    }
  }
  const std::size_t n = nodes.size();
  const int k = static_cast<int>(n) - 1;
  Matrix<Rational> x(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) x(r, c) = pow(nodes[c], static_cast<unsigned>(r));
  }
  QuotientReport out;
  out.pass = true;
  for (std::size_t i = 0; i < n; ++i) {
    const Rational base = determinant(x.minor(n - 1, i));
    std::vector<Rational> rest;
    for (std::size_t c = 0; c < n; ++c) {
      if (c != i) rest.push_back(nodes[c]);
    }
    for (std::size_t j = 0; j < n; ++j) {
      QuotientEntry e;
      e.i = static_cast<int>(i) + 1;
      e.j = static_cast<int>(j) + 1;
      e.quotient = determinant(x.minor(j, i)) / base;
      e.elementary = elementary_symmetric(rest, k + 1 - e.j);
      e.pass = e.quotient == e.elementary;
      out.pass = out.pass && e.pass;
      out.entries.push_back(e);
    }
  }
  return out;
}

Real gapmiddle_lower(int k, const Real& d_half, const Real& alpha) {
  using boost::multiprecision::exp;
  if (k < 1) fail(ErrorCode::invalid_argument, "gapmiddle bound needs k >= 1");
  if (!(d_half > 0) || !(alpha > 0)) fail(ErrorCode::out_of_range, "gapmiddle bound needs D, alpha > 0");
  const Real log_q = d_half * d_half * alpha / k;
  Real prod = 1;
  for (int i = 1; i <= k; ++i) prod *= 1 - exp(-2 * i * log_q);
  Real four_k = 1;
  for (int i = 0; i < k; ++i) four_k *= 4;
  return prod / (four_k * (k + 1));
}

Real mixture_distance_lower_bound(int k, const Real& variance, const Real& d_half) {
  using boost::multiprecision::exp;
  using boost::multiprecision::sqrt;
  if (!(variance > 0) || !(variance < 1)) fail(ErrorCode::out_of_range, "variance must lie in (0, 1)");
  const Real alpha = 1 / (2 * variance) - Real(1) / 2;
  return exp(-d_half * d_half * k / (2 * variance)) * gapmiddle_lower(k, d_half, alpha) / sqrt(2 * pi());
}

Real exponential_sample_error(int k, const Real& q, const std::vector<Real>& coefficients,
                              const std::vector<Real>& rates) {
  using boost::multiprecision::exp;
  using boost::multiprecision::pow;
  if (coefficients.size() != rates.size()) fail(ErrorCode::dimension_mismatch, "coefficients and rates differ");
  Real worst = 0;
  for (int x = -k; x <= k; ++x) {
    Real g = 0;
    for (std::size_t i = 0; i < rates.size(); ++i) g += coefficients[i] * exp(rates[i] * x);
    worst = std::max(worst, Real(abs(pow(q, x * x) - g)));
  }
  return worst;
}

ExponentialFit fit_exponential_sum(int k, const Real& q, int starts, std::uint64_t seed, int budget) {
  if (k < 1) fail(ErrorCode::invalid_argument, "exponential fit needs k >= 1");
  if (!(q > 0)) fail(ErrorCode::out_of_range, "q must be positive");
  const double qd = static_cast<double>(q);
  std::vector<double> target;
  for (int x = -k; x <= k; ++x) target.push_back(std::pow(qd, x * x));
  auto objective = [&](const std::vector<double>& p) {
    double worst = 0;
    for (int x = -k; x <= k; ++x) {
      double g = 0;
      for (int i = 0; i < k; ++i) g += p[static_cast<std::size_t>(i)] * std::exp(p[static_cast<std::size_t>(k + i)] * x);
      worst = std::max(worst, std::abs(target[static_cast<std::size_t>(x + k)] - g));
    }
    return std::isfinite(worst) ? worst : std::numeric_limits<double>::max();
  };
  NelderMeadResult best;
  best.value = std::numeric_limits<double>::infinity();
  for (int s = 0; s < std::max(1, starts); ++s) {
    std::seed_seq seq{static_cast<std::uint64_t>(seed), static_cast<std::uint64_t>(s)};
    std::mt19937_64 rng(seq);
    std::uniform_real_distribution<double> coef(0.0, 2.0);
    std::uniform_real_distribution<double> rate(-2.0, 2.0);
    std::vector<double> start(static_cast<std::size_t>(2 * k));
    for (int i = 0; i < k; ++i) {
      start[static_cast<std::size_t>(i)] = coef(rng);
      start[static_cast<std::size_t>(k + i)] = rate(rng);
    }
    auto run = nelder_mead(objective, start, 0.5, budget);
    // Restarting from the incumbent escapes collapsed simplices.
    run = nelder_mead(objective, run.x, 0.1, budget);
    if (run.value < best.value) best = std::move(run);
  }
  ExponentialFit out;
  for (int i = 0; i < k; ++i) {
    out.coefficients.emplace_back(best.x[static_cast<std::size_t>(i)]);
    out.rates.emplace_back(best.x[static_cast<std::size_t>(k + i)]);
  }
  out.sample_error = exponential_sample_error(k, q, out.coefficients, out.rates);
  return out;
}

CheckResult erdelyi_check(const RationalPoly& q, int m, const Rational& l) {
  CheckResult out;
  std::ostringstream os;
  const int d = std::max(q.degree(), 0);
  if (m < 1 || l <= 0) {
    os << "hypothesis violated: need m >= 1 and L > 0";
    out.detail = os.str();
    return out;
  }
  // deg < 7 sqrt(m / L)  <=>  L d^2 < 49 m
  out.hypothesis_ok = l * d * d < Rational(49 * m);
  if (!out.hypothesis_ok) {
    os << "hypothesis violated: degree " << d << " >= 7 sqrt(m/L)";
    out.detail = os.str();
    return out;
  }
  Rational sum = 0;
  for (int j = 1; j <= m; ++j) sum += abs(q(Rational(j)));
  const Rational lhs = abs(q(Rational(0)));
  out.conclusion_ok = l * lhs <= sum;
  os << "|Q(0)| = " << to_string(lhs) << ", (1/L) sum |Q(j)| = " << to_string(Rational(sum / l));
  out.detail = os.str();
  return out;
}

CheckResult coppersmith_check(const RationalPoly& p, int m) {
  CheckResult out;
  std::ostringstream os;
  const int d = std::max(p.degree(), 0);
  if (m < 0 || 3 * d * d > m) {
    os << "hypothesis violated: need 3 d^2 <= m (d = " << d << ", m = " << m << ")";
    out.detail = os.str();
    return out;
  }
  for (int i = 0; i <= m; ++i) {
    if (abs(p(Rational(i))) > 1) {
      os << "hypothesis violated: |p(" << i << ")| > 1";
      out.detail = os.str();
      return out;
    }
  }
  out.hypothesis_ok = true;
  const Real sup = p.is_zero() ? Real(0) : sup_abs(p, 0, m);
  out.conclusion_ok = sup <= Real(3) / 2;
  os << "sup |p| on [0, m] = " << to_decimal(sup, 12);
  out.detail = os.str();
  return out;
}

RationalPoly chebyshev_t(int k) {
  if (k < 0) fail(ErrorCode::invalid_argument, "Chebyshev degree must be nonnegative");
  RationalPoly prev = RationalPoly::constant(1);
  if (k == 0) return prev;
  RationalPoly cur{Rational(0), Rational(1)};
  const RationalPoly two_x{Rational(0), Rational(2)};
  for (int i = 1; i < k; ++i) {
    RationalPoly next = two_x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

CheckResult chebyshev_extremal_check(const RationalPoly& p, const Rational& s) {
  CheckResult out;
  std::ostringstream os;
  const int d = std::max(p.degree(), 0);
  if (s < 1) {
    os << "hypothesis violated: s < 1";
    out.detail = os.str();
    return out;
  }
  const Real sup = p.is_zero() ? Real(0) : sup_abs(p, -1, 1);
  if (sup > 1) {
    os << "hypothesis violated: sup |p| on [-1, 1] = " << to_decimal(sup, 12);
    out.detail = os.str();
    return out;
  }
  out.hypothesis_ok = true;
  const Rational ps = abs(p(s));
  const Rational ts = chebyshev_t(d)(s);
  const Rational cap = pow(2 * s, static_cast<unsigned>(d));
  out.conclusion_ok = ps <= ts && ts <= cap;
  os << "|p(s)| = " << to_string(ps) << ", T_d(s) = " << to_string(ts) << ", (2s)^d = " << to_string(cap);
  out.detail = os.str();
  return out;
}

SeriesCheck series_lower_check(const Real& x) {
  using boost::multiprecision::exp;
  using boost::multiprecision::pow;
  if (!(abs(x) < 1)) fail(ErrorCode::out_of_range, "series check needs |x| < 1");
  SeriesCheck out;
  const Real ax = abs(x);
  const Real target("1e-40");
  Real prod = 1;
  Real power = 1;
  int n = 0;
  Real tail = ax / (1 - ax);
  while (tail > target && n < 100000) {
    ++n;
    power *= x;
    prod *= 1 - power;
    tail = pow(ax, n + 1) / (1 - ax);
  }
  out.terms = n;
  out.partial_product = prod;
  out.lower = prod * (1 - tail);
  out.exp_bound = exp(-pi() * pi() / (6 * (1 - x)));
  out.pass = out.lower >= out.exp_bound;
  return out;
}

}  // namespace kwise::gaussmix
