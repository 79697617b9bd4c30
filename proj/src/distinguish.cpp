#include "kwise/distinguish.hpp"

#include <cmath>
#include <sstream>

#include "kwise/krawtchouk.hpp"
#include "kwise/lp.hpp"
#include "kwise/noise.hpp"
#include "kwise/transform.hpp"

namespace kwise {

Rational advantage(const WeightPmf& p, const WeightPmf& q, int t) {
  if (p.n() != q.n()) fail(ErrorCode::dimension_mismatch, "advantage of PMFs with different dimensions");
  return tail_mass(p, t) - tail_mass(q, t);
}

ThresholdChoice best_threshold(const WeightPmf& p, const WeightPmf& q) {
  if (p.n() != q.n()) fail(ErrorCode::dimension_mismatch, "best_threshold of PMFs with different dimensions");
  std::optional<ThresholdChoice> best;
  for (int t : admissible_weights(p.n())) {
    Rational adv = advantage(p, q, t);
    if (!best || adv > best->advantage) best = ThresholdChoice{t, std::move(adv)};
  }
  return *best;
}

IntervalChoice best_interval(const WeightPmf& p, const WeightPmf& q) {
  if (p.n() != q.n()) fail(ErrorCode::dimension_mismatch, "best_interval of PMFs with different dimensions");
  const auto ws = admissible_weights(p.n());
  // diff[i] = P(w_i) - Q(w_i); interval sums via prefix differences.
  std::vector<Rational> prefix(ws.size() + 1, Rational(0));
  for (std::size_t i = 0; i < ws.size(); ++i) prefix[i + 1] = prefix[i] + p.mass(ws[i]) - q.mass(ws[i]);
  std::optional<IntervalChoice> best;
  for (std::size_t i = 0; i < ws.size(); ++i) {
    for (std::size_t j = i; j < ws.size(); ++j) {
      Rational adv = prefix[j + 1] - prefix[i];
      if (!best || adv > best->advantage) best = IntervalChoice{ws[i], ws[j], std::move(adv)};
    }
  }
  return *best;
}

const char* to_string(Scenario s) {
  switch (s) {
    case Scenario::thm8: return "thm8";
    case Scenario::thm9: return "thm9";
    case Scenario::thm10: return "thm10";
  }
  return "unknown";
}

Scenario parse_scenario(const std::string& s) {
  if (s == "thm8") return Scenario::thm8;
  if (s == "thm9") return Scenario::thm9;
  if (s == "thm10") return Scenario::thm10;
  fail(ErrorCode::invalid_argument, "unknown scenario '" + s + "'");
}

namespace {

int first_admissible_at_least(int n, const Real& x) {
  for (int w : admissible_weights(n)) {
    if (Real(w) >= x) return w;
  }
  return n + 2;
}

SeparationReport run_thm8(const ParamSet& params) {
  const int n = params.require_n();
  const int k = params.require_k();
  const Rational rho = params.require_rho();
  if (k < 2) fail(ErrorCode::precondition, "thm8 needs k >= 2");
  if (rho <= 0) fail(ErrorCode::out_of_range, "thm8 needs rho in (0, 1]");
  const Real c = params.c.value_or(Real(1));

  // Concentrated input: k-uniform inside the slab |w| <= 10 sqrt(kn),
  // minimizing the next even moment.
  const int slab = static_cast<int>(std::floor(10 * std::sqrt(static_cast<double>(k) * n)));
  const int even = (k + 2) / 2 * 2;
  WeightObjective concentrate{[even](int w) { return Rational(ipow(w, static_cast<unsigned>(even))); },
                              Sense::minimize};
  LpSolution base = construct_k_uniform(n, k, SupportFilter::slab(std::min(slab, n)), concentrate);
  if (base.status != LpStatus::optimal || !base.primal) fail(ErrorCode::precondition, "thm8 input construction infeasible");
  const WeightPmf sb = bu_to_sb(*base.primal, k);
  const WeightPmf smoothed = smooth(sb, rho);
  const WeightPmf uniform = binomial_pmf(n);
  const Real scale = boost::multiprecision::sqrt(Real(k) * n);

  SeparationReport r;
  r.scenario = Scenario::thm8;
  r.params = params;
  if (params.beta) {
    r.t = first_admissible_at_least(n, *params.beta * scale / to_real(rho));
  } else {
    std::optional<Rational> best;
    for (int t : admissible_weights(n)) {
      if (t <= 0) continue;
      Rational adv = advantage(uniform, smoothed, t);
      if (!best || adv > *best) {
        best = adv;
        r.t = t;
      }
    }
    if (!best) fail(ErrorCode::precondition, "thm8 needs a positive admissible threshold");
  }
  r.lhs = tail_mass(uniform, r.t);
  r.rhs = tail_mass(smoothed, r.t);
  r.advantage = r.lhs - r.rhs;
  r.template_value = boost::multiprecision::pow(Real(2), -c * k / to_real(rho * rho));

  std::optional<int> first_positive;
  for (int t : admissible_weights(n)) {
    if (t > 0 && advantage(uniform, smoothed, t) > 0) {
      first_positive = t;
      break;
    }
  }
  r.notes.emplace_back("input_support", std::to_string(base.primal->support_size()));
  r.notes.emplace_back("sb_support", std::to_string(sb.support_size()));
  r.notes.emplace_back("sb_max_abs_bias", to_string(bias_profile(sb).max_abs(n)));
  r.notes.emplace_back("beta_at_t", to_decimal(Real(r.t) * to_real(rho) / scale, 12));
  if (first_positive) {
    r.notes.emplace_back("smallest_passing_beta", to_decimal(Real(*first_positive) * to_real(rho) / scale, 12));
  }
  return r;
}

SeparationReport run_thm9(const ParamSet& params) {
  const int n = params.require_n();
  const int k = params.require_k();
  const Rational rho = params.require_rho();
  const int kp = params.k_prime.value_or(2 * k);
  if (k < 2) fail(ErrorCode::precondition, "thm9 needs k >= 2");
  if (kp < 1 || kp > n) fail(ErrorCode::out_of_range, "thm9 needs 1 <= k' <= n");
  const Real c = params.c.value_or(Real(1));

  const auto ws = admissible_weights(n);
  std::vector<int> t_candidates = params.t ? std::vector<int>{*params.t} : ws;
  std::vector<int> tp_candidates;
  if (params.t_prime) {
    tp_candidates.push_back(*params.t_prime);
  } else {
    for (int w : ws) {
      if (w >= 0) tp_candidates.push_back(w);
    }
  }

  std::vector<Rational> rhs;
  rhs.reserve(t_candidates.size());
  for (int t : t_candidates) {
    LpSolution s = extremal_tail(n, kp, t, ExtremalKind::max_tail);
    if (s.status != LpStatus::optimal) fail(ErrorCode::internal, "k'-uniform extremal LP failed");
    rhs.push_back(s.value);
  }

  SeparationReport r;
  r.scenario = Scenario::thm9;
  r.params = params;
  std::optional<int> best_tp;
  for (int tp : tp_candidates) {
    LpSolution input = extremal_tail(n, k, tp, ExtremalKind::max_tail);
    if (input.status != LpStatus::optimal || !input.primal) fail(ErrorCode::precondition, "thm9 input construction infeasible");
    const WeightPmf smoothed = smooth(bu_to_sb(*input.primal, k), rho);
    for (std::size_t i = 0; i < t_candidates.size(); ++i) {
      Rational lhs = tail_mass(smoothed, t_candidates[i]);
      Rational adv = lhs - rhs[i];
      if (!best_tp || adv > r.advantage) {
        best_tp = tp;
        r.t = t_candidates[i];
        r.lhs = std::move(lhs);
        r.rhs = rhs[i];
        r.advantage = std::move(adv);
      }
    }
  }
  if (rho > 0 && rho < 1) {
    const Real rr = to_real(rho);
    r.template_value = boost::multiprecision::pow(c * rr * rr / boost::multiprecision::log(1 / rr), Real(k) / 2);
  } else {
    r.template_value = 0;
  }
  r.notes.emplace_back("t_prime", std::to_string(*best_tp));
  r.notes.emplace_back("k_prime", std::to_string(kp));
  return r;
}

SeparationReport run_thm10(const ParamSet& params) {
  const int n = params.n.value_or(64);
  const Rational rho = params.require_rho();
  const int a = params.a.value_or(-8);
  const int b = params.b.value_or(8);
  if (a == b) fail(ErrorCode::invalid_argument, "thm10 needs two distinct weights");
  if (rho <= 0) fail(ErrorCode::out_of_range, "thm10 needs rho in (0, 1]");
  const Real c = params.c.value_or(Real(1));
  const WeightPmf d = mixture(slice_pmf(n, a), slice_pmf(n, b), Rational(1, 2));
  const WeightPmf smoothed = smooth(d, rho);
  const WeightPmf uniform = binomial_pmf(n);

  SeparationReport r;
  r.scenario = Scenario::thm10;
  r.params = params;
  r.params.n = n;
  r.params.a = a;
  r.params.b = b;
  IntervalChoice forward = best_interval(uniform, smoothed);
  IntervalChoice backward = best_interval(smoothed, uniform);
  const bool use_forward = forward.advantage >= backward.advantage;
  const IntervalChoice& best = use_forward ? forward : backward;
  r.interval = std::make_pair(best.a, best.b);
  r.t = best.a;
  const Rational pb = interval_mass(uniform, best.a, best.b);
  const Rational pq = interval_mass(smoothed, best.a, best.b);
  r.lhs = use_forward ? pb : pq;
  r.rhs = use_forward ? pq : pb;
  r.advantage = r.lhs - r.rhs;
  r.template_value = boost::multiprecision::pow(Real(2), -c * 2 / to_real(rho));
  r.notes.emplace_back("orientation", use_forward ? "B_minus_smoothed" : "smoothed_minus_B");
  const ThresholdChoice up = best_threshold(uniform, smoothed);
  const ThresholdChoice down = best_threshold(smoothed, uniform);
  r.notes.emplace_back("best_threshold_gap", to_string(std::max(up.advantage, down.advantage)));
  return r;
}

}  // namespace

SeparationReport run_separation(Scenario scenario, const ParamSet& params) {
  switch (scenario) {
    case Scenario::thm8: return run_thm8(params);
    case Scenario::thm9: return run_thm9(params);
    case Scenario::thm10: return run_thm10(params);
  }
  fail(ErrorCode::internal, "unhandled scenario");
}

std::string separation_csv_header() { return "scenario,n,k,rho,t,lhs,rhs,advantage,template"; }

std::string separation_csv_row(const SeparationReport& r) {
  std::ostringstream os;
  os << to_string(r.scenario) << ',' << (r.params.n ? std::to_string(*r.params.n) : "") << ','
     << (r.params.k ? std::to_string(*r.params.k) : "") << ',' << (r.params.rho ? to_string(*r.params.rho) : "")
     << ',' << r.t << ',' << to_string(r.lhs) << ',' << to_string(r.rhs) << ',' << to_string(r.advantage) << ','
     << to_decimal(r.template_value, 12);
  return os.str();
}

}  // namespace kwise
