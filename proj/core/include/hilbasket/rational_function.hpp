#pragma once

#include <string>
#include <vector>

#include "hilbasket/polynomial.hpp"

namespace hilbasket {

/// Quotient of integer polynomials in t kept in a unique canonical form.
///
/// Canonical form: num and den share no nonconstant factor over Q, the
/// coefficients of num and den together have gcd 1, and the lowest-order
/// nonzero coefficient of den is positive. The zero function is 0/1.
class RationalFunction {
 public:
  RationalFunction();
  RationalFunction(IntPolynomial num, IntPolynomial den);
  RationalFunction(const RatPolynomial& num, const RatPolynomial& den);
  static RationalFunction constant(const Rational& c);

  const IntPolynomial& num() const noexcept { return num_; }
  const IntPolynomial& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) = default;

  // Taylor coefficients at t = 0; requires den(0) != 0.
  std::vector<Rational> series(std::size_t terms) const;

  // Multiplicity of the factor (1 - t) in den minus that in num.
  long pole_order_at_one() const;

  // "num / den" with den's integer content factored out, e.g.
  // "(t - 2*t^2 + t^3)/(5*(1 - t^5))".
  std::string to_string() const;

 private:
  void normalize();

  IntPolynomial num_;
  IntPolynomial den_;
};

// Renders a numerator over c * den as "(num)/(c*(den))".
std::string render_fraction(const IntPolynomial& num, const Integer& scale, const IntPolynomial& den);

/// Parses integer literals, t, + - * / ^ and parentheses, e.g.
/// "(2*t+t^2+2*t^3)/(5*(1-t^5))". Exponents are nonnegative integer literals.
RationalFunction parse_rational_function(const std::string& text);

}  // namespace hilbasket
