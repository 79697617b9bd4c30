#pragma once

#include <optional>
#include <string>

#include "kwise/numeric.hpp"

namespace kwise {

/// Scalar parameters shared by the experiments. Absent fields take
/// per-operation defaults; present fields are domain-checked by require_*.
struct ParamSet {
  std::optional<int> n;
  std::optional<int> k;
  std::optional<int> k_prime;
  std::optional<int> t;
  std::optional<int> t_prime;
  std::optional<int> a;
  std::optional<int> b;
  std::optional<int> m;
  std::optional<Rational> rho;
  std::optional<Rational> eps;
  std::optional<Rational> delta;
  std::optional<Real> theta;
  std::optional<Real> sigma2;
  std::optional<Real> alpha;
  std::optional<Rational> q;
  std::optional<Real> d_half;
  std::optional<Real> erdelyi_l;
  /// Caller-supplied universal constant for template formulas.
  std::optional<Real> c;
  std::optional<Real> beta;

  int require_n() const;
  int require_k() const;
  Rational require_rho() const;
};

}  // namespace kwise
