#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "kwise/numeric.hpp"

namespace kwise {

/// Univariate polynomial, constant term first. Trailing zeros are trimmed so
/// that degree() == coefficients().size() - 1 (the zero polynomial has
/// degree -1).
template <class T>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(int c) : coeffs_{T(c)} { trim(); }
  explicit Polynomial(std::vector<T> coefficients) : coeffs_(std::move(coefficients)) { trim(); }
  Polynomial(std::initializer_list<T> coefficients) : coeffs_(coefficients) { trim(); }

  static Polynomial constant(const T& c) { return Polynomial(std::vector<T>{c}); }
  static Polynomial monomial(std::size_t power, const T& c = T(1)) {
    std::vector<T> v(power + 1, T(0));
    v[power] = c;
    return Polynomial(std::move(v));
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<T>& coefficients() const { return coeffs_; }
  T coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : T(0); }

  template <class U>
  U operator()(const U& x) const {
    U acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + U(*it);
    return acc;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const T& s) {
    for (auto& c : coeffs_) c *= s;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const T& s) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> out(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<T> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * T(static_cast<long>(i));
    return Polynomial(std::move(out));
  }

  /// p(x) -> p(a + b x)
  Polynomial compose_affine(const T& a, const T& b) const {
    Polynomial result;
    Polynomial inner{a, b};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      result = result * inner + constant(*it);
    }
    return result;
  }

  /// Quotient and remainder; requires exact division in T.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const {
    if (divisor.is_zero()) fail(ErrorCode::singular, "polynomial division by zero");
    std::vector<T> rem = coeffs_;
    int dd = divisor.degree();
    if (degree() < dd) return {Polynomial(), *this};
    std::vector<T> quo(static_cast<std::size_t>(degree() - dd) + 1, T(0));
    const T& lead = divisor.coeffs_.back();
    for (int i = degree() - dd; i >= 0; --i) {
      T c = rem[static_cast<std::size_t>(i + dd)] / lead;
      quo[static_cast<std::size_t>(i)] = c;
      if (c == 0) continue;
      for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(i + j)] -= c * divisor.coeffs_[static_cast<std::size_t>(j)];
    }
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
};

using RationalPoly = Polynomial<Rational>;
using RealPoly = Polynomial<Real>;

}  // namespace kwise
