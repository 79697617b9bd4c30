#include "kwise/numeric.hpp"

#include <charconv>
#include <sstream>
#include <unordered_map>

#include <boost/math/constants/constants.hpp>

namespace kwise {

std::string to_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  if (text.empty()) fail(ErrorCode::parse, "empty number in '" + std::string(whole) + "'");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) fail(ErrorCode::parse, "bad number '" + std::string(whole) + "'");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      fail(ErrorCode::parse, "bad number '" + std::string(whole) + "'");
    }
  }
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return BigInt(digits);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\n')) {
    text.remove_suffix(1);
  }
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_integer(text.substr(0, slash), text);
    BigInt den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) fail(ErrorCode::parse, "zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    bool negative = !int_part.empty() && int_part[0] == '-';
    if (int_part == "-" || int_part == "+" || int_part.empty()) {
      int_part = "0";
    }
    BigInt whole = parse_integer(int_part, text);
    BigInt frac = frac_part.empty() ? BigInt(0) : parse_integer(frac_part, text);
    if (!frac_part.empty() && (frac_part[0] == '-' || frac_part[0] == '+')) {
      fail(ErrorCode::parse, "bad number '" + std::string(text) + "'");
    }
    BigInt scale = ipow(10, static_cast<unsigned>(frac_part.size()));
    Rational value = Rational(abs(whole)) + Rational(frac, scale);
    return negative ? Rational(-value) : value;
  }
  return Rational(parse_integer(text, text));
}

Real to_real(const Rational& r) {
  return Real(numerator(r)) / Real(denominator(r));
}

Real to_real(const BigInt& z) { return Real(z); }

std::string to_decimal(const Real& x, int digits) {
  std::ostringstream os;
  os << std::setprecision(digits) << x;
  return os.str();
}

std::string to_decimal(const Rational& r, int digits) {
  return to_decimal(to_real(r), digits);
}

const std::vector<BigInt>& pascal_row(int n) {
  thread_local std::unordered_map<int, std::vector<BigInt>> cache;
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  std::vector<BigInt> row(static_cast<std::size_t>(n) + 1);
  row[0] = 1;
  for (int k = 1; k <= n; ++k) {
    row[k] = row[k - 1] * (n - k + 1) / k;
  }
  return cache.emplace(n, std::move(row)).first->second;
}

BigInt binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  return pascal_row(n)[k];
}

Rational pow(const Rational& base, unsigned exponent) {
  return Rational(boost::multiprecision::pow(numerator(base), exponent),
                  boost::multiprecision::pow(denominator(base), exponent));
}

BigInt ipow(long long base, unsigned exponent) {
  return boost::multiprecision::pow(BigInt(base), exponent);
}

Real pi() { return boost::math::constants::pi<Real>(); }
Real e() { return boost::math::constants::e<Real>(); }

}  // namespace kwise
