#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/gmp.hpp>

namespace hilbasket {

using Integer = boost::multiprecision::mpz_int;
// mpq_rational keeps itself in lowest terms with a positive denominator.
using Rational = boost::multiprecision::mpq_rational;

inline Rational make_rational(const Integer& num, const Integer& den) { return Rational(num, den); }

inline Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integral(const Rational& q) { return denominator(q) == 1; }

Integer floor(const Rational& q);
Rational frac(const Rational& q);

// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Accepts "p", "-p" and "p/q".
Rational parse_rational(const std::string& text);

// Small-integer helpers for singularity data.
std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t mod64(std::int64_t a, std::int64_t m);  // result in [0, m)
// Inverse of a modulo m; m > 1 and gcd(a, m) = 1 required.
std::int64_t inverse_mod64(std::int64_t a, std::int64_t m);
std::int64_t euler_phi(std::int64_t n);
std::int64_t to_int64(const Integer& z);

}  // namespace hilbasket
