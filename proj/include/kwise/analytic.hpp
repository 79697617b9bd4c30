#pragma once

#include <string>
#include <utility>
#include <vector>

#include "kwise/numeric.hpp"

namespace kwise::analytic {

/// sqrt(2) (2kn / (e t^2))^k: tail bound for (2k)-uniform weights, t > 0.
Real fact2(int n, int k, const Real& t);

/// 2^(-a^2/n) / (2 sqrt(n)): lower bound on Pr[B = a].
Real stirling(int n, int a);

/// Third-moment ratio of the centered noise variables,
/// (1 + rho^2) / ((1 - rho^2)^(1/2) sqrt(n)). Needs rho in [0, 1).
Real berry_esseen_noise(const Real& rho, int n);

struct PetrovReport {
  /// exp(sum E[Y^3] / (6 (sum sigma^2)^(3/2)) * theta^3)
  Real factor;
  Real epsilon_max;  ///< (theta + 1) / (c sqrt(n))
  Real theta_max;    ///< c n^(1/6)
  bool theta_in_range = false;
};

/// Cramér correction for the noise variables around x of weight w.
PetrovReport petrov_noise(int n, int w, const Real& rho, const Real& theta, const Real& c);

/// Standard normal density and upper tail.
Real normal_pdf(const Real& x);
Real normal_tail(const Real& theta);

/// (phi(theta) / (theta + 1/theta), phi(theta) / theta), bracketing the
/// normal upper tail; theta > 0.
std::pair<Real, Real> phi_tail(const Real& theta);

/// 2 exp(-c s^2 / ((1 - rho^2) n + s)).
Real bernstein_noise(int n, const Real& rho, const Real& s, const Real& c);

}  // namespace kwise::analytic
