#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace kwise {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
/// 50 decimal digits; used wherever a bound is irrational.
using Real = boost::multiprecision::cpp_bin_float_50;

enum class ErrorCode {
  invalid_argument = 1,
  degenerate_input = 2,
  parity = 3,
  out_of_range = 4,
  precondition = 5,
  dimension_mismatch = 6,
  parse = 7,
  singular = 8,
  internal = 99,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

/// "num/den" in lowest terms, always with an explicit denominator.
std::string to_string(const Rational& r);
/// Accepts "p/q", "p", or a finite decimal such as "0.25".
Rational parse_rational(std::string_view text);

Real to_real(const Rational& r);
Real to_real(const BigInt& z);
/// Decimal rendering with the given number of significant digits.
std::string to_decimal(const Real& x, int digits = 17);
std::string to_decimal(const Rational& r, int digits = 17);

/// Binomial coefficient C(n, k); zero outside 0 <= k <= n.
BigInt binomial(int n, int k);
/// Row n of Pascal's triangle, cached per thread.
const std::vector<BigInt>& pascal_row(int n);

Rational pow(const Rational& base, unsigned exponent);
BigInt ipow(long long base, unsigned exponent);

inline Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

Real pi();
Real e();

}  // namespace kwise
