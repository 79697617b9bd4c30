#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kwise/numeric.hpp"
#include "kwise/polynomial.hpp"
#include "kwise/weight_pmf.hpp"

namespace kwise {

enum class Sense { maximize, minimize };
enum class LpStatus { optimal, infeasible, unbounded };

const char* to_string(LpStatus s);

/// Equality-form LP over nonnegative weight masses:
///   optimize objective . x  s.t.  rows x = rhs,  x >= 0.
/// Variable i is the mass placed on weight variables[i].
struct LpProblem {
  int n = 0;
  std::vector<int> variables;
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  std::vector<Rational> objective;
  Sense sense = Sense::maximize;

  /// Throws on ragged rows, duplicate or inadmissible weights.
  void validate() const;
};

struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  Rational value = 0;
  /// Vertex values, one per variable (empty unless optimal).
  std::vector<Rational> x;
  /// Simplex multipliers y with y . rhs == value and y . column_j >= c_j
  /// (maximize) or <= c_j (minimize) for every column.
  std::vector<Rational> row_duals;
  /// x as a weight PMF, present when the vertex is a probability vector.
  std::optional<WeightPmf> primal;
  /// For moment LPs: the row duals read as power-basis coefficients.
  std::optional<RationalPoly> dual;
};

/// Two-phase tableau simplex in exact rationals with Bland's rule.
/// Deterministic: identical problems give identical vertices.
LpSolution solve_exact_lp(const LpProblem& problem);

/// Which weights a construction may use.
class SupportFilter {
 public:
  static SupportFilter all();
  /// w == residue (mod modulus)
  static SupportFilter modular(int modulus, int residue);
  /// |w| <= radius
  static SupportFilter slab(int radius);
  static SupportFilter only(std::vector<int> weights);
  static SupportFilter custom(std::function<bool(int)> predicate, std::string label = "custom");

  bool admits(int w) const;
  std::vector<int> admitted(int n) const;
  std::string describe() const;

 private:
  enum class Kind { all, modular, slab, only, custom };
  Kind kind_ = Kind::all;
  int modulus_ = 1;
  int residue_ = 0;
  int radius_ = 0;
  std::vector<int> weights_;
  std::function<bool(int)> predicate_;
  std::string label_;
};

/// Objective on weights for moment LPs.
struct WeightObjective {
  std::function<Rational(int)> coefficient;
  Sense sense = Sense::maximize;
};

/// Rows j = 0..k: sum_w w^j x_w = E[B^j].
LpProblem moment_lp(int n, int k, const std::vector<int>& weights, const WeightObjective& objective);

/// A k-uniform weight PMF supported inside the filter, found as an LP vertex.
/// Without an objective the first feasible vertex is returned.
LpSolution construct_k_uniform(int n, int k, const SupportFilter& filter = SupportFilter::all(),
                               const std::optional<WeightObjective>& objective = std::nullopt);

enum class ExtremalKind { max_tail, max_point, signed_gap };
const char* to_string(ExtremalKind k);
ExtremalKind parse_extremal_kind(const std::string& s);

/// Extremal tail quantities over all k-uniform weight PMFs admitted by the
/// filter.
///   max_tail   : max Pr[W >= t], with the sandwiching dual polynomial.
///   max_point  : max Pr[W = t].
///   signed_gap : max |Pr[W >= t] - Pr[B >= t]|; primal is the maximizer.
LpSolution extremal_tail(int n, int k, int t, ExtremalKind kind,
                         const SupportFilter& filter = SupportFilter::all());

/// Carathéodory sparsification: a k-uniform PMF on at most k+1 of the
/// input's support weights.
WeightPmf sparsify(const WeightPmf& p, int k);

/// Residue class mod m containing t, normalized to [0, m).
int residue_class_of(int t, int modulus);

}  // namespace kwise
