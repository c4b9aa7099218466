#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "hilbasket/error.hpp"
#include "hilbasket/numbers.hpp"

namespace hilbasket {

/// Dense univariate polynomial in t, coefficient i multiplying t^i.
///
/// The coefficient vector never has trailing zeros, so the zero polynomial is
/// the empty vector and degree() is -1 for it.
template <typename Coeff>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<Coeff> coeffs) : coeffs_(coeffs) { trim(); }

  static Polynomial constant(const Coeff& c) { return Polynomial(std::vector<Coeff>{c}); }
  static Polynomial monomial(const Coeff& c, std::size_t degree) {
    std::vector<Coeff> v(degree + 1, Coeff(0));
    v[degree] = c;
    return Polynomial(std::move(v));
  }

  const std::vector<Coeff>& coeffs() const noexcept { return coeffs_; }
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  // Coefficient of t^i, zero beyond the degree.
  Coeff operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Coeff(0); }
  const Coeff& leading() const { return coeffs_.back(); }

  // Lowest degree with a nonzero coefficient; -1 for the zero polynomial.
  long valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i] != 0) return static_cast<long>(i);
    }
    return -1;
  }

  Coeff evaluate(const Coeff& x) const {
    Coeff acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Coeff> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Coeff(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
    return Polynomial(std::move(out));
  }
  friend Polynomial operator-(const Polynomial& a) {
    std::vector<Coeff> out(a.coeffs_);
    for (auto& c : out) c = -c;
    return Polynomial(std::move(out));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Coeff> out(a.coeffs_.size() + b.coeffs_.size() - 1, Coeff(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
  }
  friend Polynomial operator*(const Coeff& c, const Polynomial& p) {
    std::vector<Coeff> out(p.coeffs_);
    for (auto& x : out) x *= c;
    return Polynomial(std::move(out));
  }
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Coeff> coeffs_;
};

using IntPolynomial = Polynomial<Integer>;
using RatPolynomial = Polynomial<Rational>;

RatPolynomial to_rational(const IntPolynomial& p);

// Scales p by the least common multiple of its denominators; returns the
// integer polynomial and the scale factor used.
std::pair<IntPolynomial, Integer> clear_denominators(const RatPolynomial& p);

// gcd of the coefficients, nonnegative; zero for the zero polynomial.
Integer content(const IntPolynomial& p);

// Division with remainder over the rationals; divisor must be nonzero.
std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b);

// Monic gcd over the rationals (zero when both inputs are zero).
RatPolynomial gcd(const RatPolynomial& a, const RatPolynomial& b);

// Quotient a / b, throwing if b does not divide a exactly over the integers.
IntPolynomial exact_divide(const IntPolynomial& a, const IntPolynomial& b);

/// Rational polynomial u with deg u < deg h and f*u = 1 (mod h).
///
/// Computed with the extended Euclidean algorithm over Q. Throws NotCoprime
/// when gcd(f, h) is not a constant.
RatPolynomial poly_inverse_mod(const RatPolynomial& f, const RatPolynomial& h);

// Ascending-degree rendering such as "1 - 2*t + t^2"; "0" for zero.
std::string to_string(const IntPolynomial& p);
std::string to_string(const RatPolynomial& p);

// (1 - t^n)
IntPolynomial one_minus_t_pow(std::size_t n);
// n-th cyclotomic polynomial, n >= 1.
IntPolynomial cyclotomic(std::size_t n);

}  // namespace hilbasket
