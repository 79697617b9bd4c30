#include "kwise/analytic.hpp"

#include <boost/math/special_functions/erf.hpp>

namespace kwise::analytic {

using boost::multiprecision::exp;
using boost::multiprecision::pow;
using boost::multiprecision::sqrt;

Real fact2(int n, int k, const Real& t) {
  if (n < 1 || k < 1) fail(ErrorCode::invalid_argument, "fact2 needs n, k >= 1");
  if (t <= 0) fail(ErrorCode::out_of_range, "fact2 needs t > 0");
  return sqrt(Real(2)) * pow(Real(2 * k) * n / (e() * t * t), Real(k));
}

Real stirling(int n, int a) {
  if (n < 1) fail(ErrorCode::invalid_argument, "stirling needs n >= 1");
  if (a < -n || a > n || (n - a) % 2 != 0) fail(ErrorCode::parity, "stirling needs an admissible weight");
  return pow(Real(2), -Real(a) * a / n) / (2 * sqrt(Real(n)));
}

Real berry_esseen_noise(const Real& rho, int n) {
  if (rho < 0 || rho >= 1) fail(ErrorCode::out_of_range, "berry-esseen needs rho in [0, 1)");
  if (n < 1) fail(ErrorCode::invalid_argument, "berry-esseen needs n >= 1");
  return (1 + rho * rho) / (sqrt(1 - rho * rho) * sqrt(Real(n)));
}

PetrovReport petrov_noise(int n, int w, const Real& rho, const Real& theta, const Real& c) {
  if (rho < 0 || rho >= 1) fail(ErrorCode::out_of_range, "petrov needs rho in [0, 1)");
  if (c <= 0) fail(ErrorCode::out_of_range, "petrov needs c > 0");
  if (theta < 0) fail(ErrorCode::out_of_range, "petrov needs theta >= 0");
  const Real variance = Real(n) * (1 - rho * rho);
  const Real third = -2 * rho * (1 - rho * rho) * w;
  PetrovReport r;
  r.factor = exp(third / (6 * pow(variance, Real(3) / 2)) * theta * theta * theta);
  r.epsilon_max = (theta + 1) / (c * sqrt(Real(n)));
  r.theta_max = c * pow(Real(n), Real(1) / 6);
  r.theta_in_range = theta <= r.theta_max;
  return r;
}

Real normal_pdf(const Real& x) { return exp(-x * x / 2) / sqrt(2 * pi()); }

Real normal_tail(const Real& theta) { return boost::math::erfc(theta / sqrt(Real(2))) / 2; }

std::pair<Real, Real> phi_tail(const Real& theta) {
  if (theta <= 0) fail(ErrorCode::out_of_range, "phi_tail needs theta > 0");
  const Real d = normal_pdf(theta);
  return {d / (theta + 1 / theta), d / theta};
}

Real bernstein_noise(int n, const Real& rho, const Real& s, const Real& c) {
  if (rho < 0 || rho > 1) fail(ErrorCode::out_of_range, "bernstein needs rho in [0, 1]");
  if (s <= 0) fail(ErrorCode::out_of_range, "bernstein needs s > 0");
  return 2 * exp(-c * s * s / ((1 - rho * rho) * n + s));
}

}  // namespace kwise::analytic
