#include "kwise/params.hpp"

namespace kwise {

int ParamSet::require_n() const {
  if (!n) fail(ErrorCode::invalid_argument, "parameter n is required");
  if (*n < 1) fail(ErrorCode::degenerate_input, "n must be positive");
  return *n;
}

int ParamSet::require_k() const {
  if (!k) fail(ErrorCode::invalid_argument, "parameter k is required");
  if (*k < 0 || (n && *k > *n)) fail(ErrorCode::out_of_range, "k must lie in [0, n]");
  return *k;
}

Rational ParamSet::require_rho() const {
  if (!rho) fail(ErrorCode::invalid_argument, "parameter rho is required");
  if (*rho < 0 || *rho > 1) fail(ErrorCode::out_of_range, "rho must lie in [0, 1]");
  return *rho;
}

}  // namespace kwise
