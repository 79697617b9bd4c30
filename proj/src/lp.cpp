#include "kwise/lp.hpp"

#include <algorithm>
#include <set>

namespace kwise {

const char* to_string(LpStatus s) {
  switch (s) {
    case LpStatus::optimal: return "optimal";
    case LpStatus::infeasible: return "infeasible";
    case LpStatus::unbounded: return "unbounded";
  }
  return "unknown";
}

const char* to_string(ExtremalKind k) {
  switch (k) {
    case ExtremalKind::max_tail: return "max_tail";
    case ExtremalKind::max_point: return "max_point";
    case ExtremalKind::signed_gap: return "signed_gap";
  }
  return "unknown";
}

ExtremalKind parse_extremal_kind(const std::string& s) {
  if (s == "max_tail") return ExtremalKind::max_tail;
  if (s == "max_point") return ExtremalKind::max_point;
  if (s == "signed_gap") return ExtremalKind::signed_gap;
  fail(ErrorCode::invalid_argument, "unknown objective '" + s + "'");
}

void LpProblem::validate() const {
  if (variables.empty()) fail(ErrorCode::precondition, "LP has no variables");
  if (objective.size() != variables.size()) fail(ErrorCode::dimension_mismatch, "objective length != variable count");
  if (rows.size() != rhs.size()) fail(ErrorCode::dimension_mismatch, "row count != rhs length");
  for (const auto& r : rows) {
    if (r.size() != variables.size()) fail(ErrorCode::dimension_mismatch, "constraint row length != variable count");
  }
  std::set<int> seen;
  for (int w : variables) {
    if (!admissible_weight(n, w)) fail(ErrorCode::invalid_argument, "LP variable is not an admissible weight");
    if (!seen.insert(w).second) fail(ErrorCode::invalid_argument, "duplicate LP variable");
  }
}

namespace {

class Tableau {
 public:
  Tableau(const LpProblem& p) : m_(p.rows.size()), n_(p.variables.size()) {
    a_.assign(m_, std::vector<Rational>(n_ + m_, Rational(0)));
    b_.resize(m_);
    sign_.assign(m_, 1);
    basis_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      sign_[i] = p.rhs[i] < 0 ? -1 : 1;
      for (std::size_t j = 0; j < n_; ++j) a_[i][j] = sign_[i] < 0 ? Rational(-p.rows[i][j]) : p.rows[i][j];
      b_[i] = sign_[i] < 0 ? Rational(-p.rhs[i]) : p.rhs[i];
      a_[i][n_ + i] = 1;
      basis_[i] = n_ + i;
    }
  }

  /// Maximizes cost . x over columns [0, n_) with Bland's rule.
  LpStatus optimize(const std::vector<Rational>& cost) {
    std::vector<Rational> reduced(n_);
    for (;;) {
      std::vector<bool> is_basic(n_ + m_, false);
      for (auto c : basis_) is_basic[c] = true;
      std::size_t entering = n_;
      for (std::size_t j = 0; j < n_ && entering == n_; ++j) {
        if (is_basic[j]) continue;
        Rational d = cost[j];
        for (std::size_t i = 0; i < m_; ++i) {
          if (a_[i][j] != 0 && cost[basis_[i]] != 0) d -= cost[basis_[i]] * a_[i][j];
        }
        if (d > 0) entering = j;
      }
      if (entering == n_) return LpStatus::optimal;

      std::size_t leave = m_;
      Rational best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (a_[i][entering] <= 0) continue;
        Rational ratio = b_[i] / a_[i][entering];
        if (leave == m_ || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (leave == m_) return LpStatus::unbounded;
      pivot(leave, entering);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    const Rational piv = a_[r][c];
    for (auto& v : a_[r]) {
      if (v != 0) v /= piv;
    }
    b_[r] /= piv;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r || a_[i][c] == 0) continue;
      const Rational f = a_[i][c];
      for (std::size_t j = 0; j < n_ + m_; ++j) {
        if (a_[r][j] != 0) a_[i][j] -= f * a_[r][j];
      }
      b_[i] -= f * b_[r];
    }
    basis_[r] = c;
  }

  /// Pivots zero-valued artificials out of the basis where a real column
  /// allows it. Rows where none does are redundant and stay put.
  void drive_out_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (a_[i][j] != 0) {
          pivot(i, j);
          break;
        }
      }
    }
  }

  Rational artificial_total() const {
    Rational s = 0;
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] >= n_) s += b_[i];
    }
    return s;
  }

  std::vector<Rational> primal() const {
    std::vector<Rational> x(n_, Rational(0));
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) x[basis_[i]] = b_[i];
    }
    return x;
  }

  /// y = S * c_B^T B^{-1}, read from the artificial columns.
  std::vector<Rational> duals(const std::vector<Rational>& cost) const {
    std::vector<Rational> y(m_, Rational(0));
    for (std::size_t i = 0; i < m_; ++i) {
      Rational s = 0;
      for (std::size_t r = 0; r < m_; ++r) {
        const Rational& cb = cost[basis_[r]];
        if (cb != 0 && a_[r][n_ + i] != 0) s += cb * a_[r][n_ + i];
      }
      y[i] = sign_[i] < 0 ? Rational(-s) : s;
    }
    return y;
  }

 private:
  std::size_t m_;
  std::size_t n_;
  std::vector<std::vector<Rational>> a_;
  std::vector<Rational> b_;
  std::vector<int> sign_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LpSolution solve_exact_lp(const LpProblem& problem) {
  problem.validate();
  const std::size_t nv = problem.variables.size();
  const std::size_t m = problem.rows.size();
  Tableau tab(problem);

  // Phase 1: maximize -(sum of artificials).
  std::vector<Rational> phase1(nv + m, Rational(0));
  for (std::size_t i = 0; i < m; ++i) phase1[nv + i] = -1;
  tab.optimize(phase1);
  LpSolution sol;
  if (tab.artificial_total() != 0) {
    sol.status = LpStatus::infeasible;
    return sol;
  }
  tab.drive_out_artificials();

  std::vector<Rational> cost(nv + m, Rational(0));
  const bool maximize = problem.sense == Sense::maximize;
  for (std::size_t j = 0; j < nv; ++j) cost[j] = maximize ? problem.objective[j] : Rational(-problem.objective[j]);
  if (tab.optimize(cost) == LpStatus::unbounded) {
    sol.status = LpStatus::unbounded;
    return sol;
  }

  sol.status = LpStatus::optimal;
  sol.x = tab.primal();
  sol.row_duals = tab.duals(cost);
  if (!maximize) {
    for (auto& y : sol.row_duals) y = -y;
  }
  sol.value = 0;
  for (std::size_t j = 0; j < nv; ++j) sol.value += problem.objective[j] * sol.x[j];

  Rational total = 0;
  for (const auto& v : sol.x) total += v;
  if (total == 1 && problem.n >= 1) {
    std::map<int, Rational> masses;
    for (std::size_t j = 0; j < nv; ++j) {
      if (sol.x[j] != 0) masses.emplace(problem.variables[j], sol.x[j]);
    }
    sol.primal.emplace(problem.n, std::move(masses));
  }
  return sol;
}

SupportFilter SupportFilter::all() { return SupportFilter(); }

SupportFilter SupportFilter::modular(int modulus, int residue) {
  if (modulus < 1) fail(ErrorCode::invalid_argument, "modulus must be positive");
  SupportFilter f;
  f.kind_ = Kind::modular;
  f.modulus_ = modulus;
  f.residue_ = residue_class_of(residue, modulus);
  return f;
}

SupportFilter SupportFilter::slab(int radius) {
  if (radius < 0) fail(ErrorCode::invalid_argument, "slab radius must be nonnegative");
  SupportFilter f;
  f.kind_ = Kind::slab;
  f.radius_ = radius;
  return f;
}

SupportFilter SupportFilter::only(std::vector<int> weights) {
  SupportFilter f;
  f.kind_ = Kind::only;
  std::sort(weights.begin(), weights.end());
  weights.erase(std::unique(weights.begin(), weights.end()), weights.end());
  f.weights_ = std::move(weights);
  return f;
}

SupportFilter SupportFilter::custom(std::function<bool(int)> predicate, std::string label) {
  SupportFilter f;
  f.kind_ = Kind::custom;
  f.predicate_ = std::move(predicate);
  f.label_ = std::move(label);
  return f;
}

bool SupportFilter::admits(int w) const {
  switch (kind_) {
    case Kind::all: return true;
    case Kind::modular: return residue_class_of(w, modulus_) == residue_;
    case Kind::slab: return w >= -radius_ && w <= radius_;
    case Kind::only: return std::binary_search(weights_.begin(), weights_.end(), w);
    case Kind::custom: return predicate_(w);
  }
  return false;
}

std::vector<int> SupportFilter::admitted(int n) const {
  std::vector<int> out;
  for (int w : admissible_weights(n)) {
    if (admits(w)) out.push_back(w);
  }
  return out;
}

std::string SupportFilter::describe() const {
  switch (kind_) {
    case Kind::all: return "all";
    case Kind::modular: return "w = " + std::to_string(residue_) + " mod " + std::to_string(modulus_);
    case Kind::slab: return "|w| <= " + std::to_string(radius_);
    case Kind::only: return "explicit(" + std::to_string(weights_.size()) + ")";
    case Kind::custom: return label_;
  }
  return "";
}

int residue_class_of(int t, int modulus) {
  if (modulus < 1) fail(ErrorCode::invalid_argument, "modulus must be positive");
  return ((t % modulus) + modulus) % modulus;
}

LpProblem moment_lp(int n, int k, const std::vector<int>& weights, const WeightObjective& objective) {
  if (n < 1) fail(ErrorCode::degenerate_input, "dimension must be positive");
  if (k < 0 || k > n) fail(ErrorCode::out_of_range, "uniformity order outside [0, n]");
  LpProblem p;
  p.n = n;
  p.variables = weights;
  p.sense = objective.sense;
  const auto rhs = binomial_moments(n, k);
  p.rows.assign(static_cast<std::size_t>(k) + 1, std::vector<Rational>(weights.size()));
  for (std::size_t i = 0; i < weights.size(); ++i) {
    BigInt power = 1;
    for (int j = 0; j <= k; ++j) {
      p.rows[j][i] = Rational(power);
      power *= weights[i];
    }
  }
  for (const auto& b : rhs) p.rhs.emplace_back(b);
  p.objective.reserve(weights.size());
  for (int w : weights) p.objective.push_back(objective.coefficient ? objective.coefficient(w) : Rational(0));
  return p;
}

namespace {

LpSolution solve_moment_lp(const LpProblem& p) {
  LpSolution sol = solve_exact_lp(p);
  if (sol.status == LpStatus::optimal) sol.dual = RationalPoly(sol.row_duals);
  return sol;
}

std::vector<int> filtered_weights(int n, const SupportFilter& filter) {
  if (n < 1) fail(ErrorCode::degenerate_input, "dimension must be positive");
  auto ws = filter.admitted(n);
  if (ws.empty()) fail(ErrorCode::precondition, "support filter '" + filter.describe() + "' admits no weight");
  return ws;
}

}  // namespace

LpSolution construct_k_uniform(int n, int k, const SupportFilter& filter,
                               const std::optional<WeightObjective>& objective) {
  auto ws = filtered_weights(n, filter);
  return solve_moment_lp(moment_lp(n, k, ws, objective.value_or(WeightObjective{})));
}

LpSolution extremal_tail(int n, int k, int t, ExtremalKind kind, const SupportFilter& filter) {
  auto ws = filtered_weights(n, filter);
  switch (kind) {
    case ExtremalKind::max_tail:
      return solve_moment_lp(moment_lp(n, k, ws, {[t](int w) { return Rational(w >= t ? 1 : 0); }, Sense::maximize}));
    case ExtremalKind::max_point:
      return solve_moment_lp(moment_lp(n, k, ws, {[t](int w) { return Rational(w == t ? 1 : 0); }, Sense::maximize}));
    case ExtremalKind::signed_gap: {
      auto indicator = [t](int w) { return Rational(w >= t ? 1 : 0); };
      LpSolution hi = solve_exact_lp(moment_lp(n, k, ws, {indicator, Sense::maximize}));
      LpSolution lo = solve_exact_lp(moment_lp(n, k, ws, {indicator, Sense::minimize}));
      if (hi.status != LpStatus::optimal) return hi;
      const Rational reference = tail_mass(binomial_pmf(n), t);
      Rational up = hi.value - reference;
      Rational down = reference - lo.value;
      LpSolution out = up >= down ? std::move(hi) : std::move(lo);
      out.value = std::max(up, down);
      out.row_duals.clear();
      return out;
    }
  }
  fail(ErrorCode::internal, "unhandled extremal kind");
}

WeightPmf sparsify(const WeightPmf& p, int k) {
  if (k < 0 || k > p.n()) fail(ErrorCode::out_of_range, "uniformity order outside [0, n]");
  if (!is_k_uniform(p, k)) fail(ErrorCode::precondition, "sparsify input is not k-uniform");
  LpSolution sol = solve_exact_lp(moment_lp(p.n(), k, p.support(), WeightObjective{}));
  if (sol.status != LpStatus::optimal || !sol.primal) {
    fail(ErrorCode::internal, "sparsification LP failed on a feasible input");
  }
  return *sol.primal;
}

}  // namespace kwise
