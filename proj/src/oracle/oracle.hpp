#pragma once

#include <map>
#include <vector>

#include "kwise/numeric.hpp"

// Brute-force references. Everything here works on explicit string tables
// or exhaustive vertex lists and shares no code with the library proper
// beyond the number types.
namespace kwise::oracle {

using Masses = std::map<int, Rational>;

/// Probability of each of the 2^n strings (bit i set means x_i = +1) under
/// the exchangeable distribution with the given weight law.
std::vector<Rational> string_table(int n, const Masses& weight_law);
/// Weight law of an explicit string table.
Masses weight_law(int n, const std::vector<Rational>& table);

/// Uniform distribution on {-1,1}^n, marginalized by counting strings.
Masses binomial(int n);
std::vector<Rational> moments(int n, const Masses& weight_law, int k);
Rational tail(int n, const Masses& weight_law, int t);
Rational interval(int n, const Masses& weight_law, int a, int b);
/// E[x_0 x_1 ... x_{ell-1}].
Rational parity_bias(int n, const Masses& weight_law, int ell);
/// Average of prod_{i in S} x_i over the weight-t slice, |S| = ell.
Rational slice_bias(int n, int t, int ell);

/// Parity biases for every ell = 0..n, read off the coefficients of
/// (1 - z)^j (1 + z)^(n - j) for each slice j; works for any n.
std::vector<Rational> bias_by_generating_function(int n, const Masses& weight_law);

/// String-space N_rho: each bit is flipped independently w.p. (1 - rho)/2.
Masses smooth(int n, const Masses& weight_law, const Rational& rho);
/// String-space rerandomization: `rounds` times, pick a uniform coordinate
/// and replace it by a uniform bit.
Masses replace_noise(int n, const Masses& weight_law, int rounds);

enum class Objective { tail, point, signed_gap };

/// Optimum over all k-uniform weight laws on {-1,1}^n by enumerating every
/// (k+1)-subset of weights and solving the moment system exactly.
struct VertexOptimum {
  bool feasible = false;
  Rational value;
  Masses argmax;
};
VertexOptimum extremal_by_vertices(int n, int k, int t, Objective objective);

}  // namespace kwise::oracle
