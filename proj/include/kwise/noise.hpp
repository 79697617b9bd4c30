#pragma once

#include "kwise/numeric.hpp"
#include "kwise/weight_pmf.hpp"

namespace kwise {

/// Weight law of D . N_rho: each coordinate is kept with correlation rho,
/// i.e. flipped with probability (1 - rho) / 2.
WeightPmf smooth(const WeightPmf& p, const Rational& rho);

/// `rounds` independent steps of: pick a uniform coordinate (with
/// replacement across rounds) and set it to a uniform bit.
WeightPmf replace_noise(const WeightPmf& p, int rounds);

/// Moments of one smoothed coordinate (x . N_rho)_i for x_i = x_sign.
struct NoiseMoments {
  Rational mean;
  Rational second;
  Rational third;
  Rational variance;
  Rational third_central;
};

NoiseMoments noise_moments(int x_sign, const Rational& rho);

/// Exact Pr[|sum(x . N_rho) - rho * sum(x)| >= s] for any x of weight w.
Rational deviation_tail(int n, int w, const Rational& rho, const Rational& s);

}  // namespace kwise
