#include "hilbasket/numbers.hpp"

#include <limits>

#include "hilbasket/error.hpp"

namespace hilbasket {

Integer floor(const Rational& q) {
  Integer n = numerator(q);
  Integer d = denominator(q);
  Integer quot = n / d;  // truncates toward zero
  if (n < 0 && quot * d != n) quot -= 1;
  return quot;
}

Rational frac(const Rational& q) { return q - Rational(floor(q)); }

std::string to_string(const Integer& z) { return z.str(); }

std::string to_string(const Rational& q) {
  if (is_integral(q)) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

Rational parse_rational(const std::string& text) {
  auto parse_int = [&](const std::string& s) -> Integer {
    std::size_t i = 0;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) throw Error(ErrorCode::ParseError, "not a rational: '" + text + "'");
    for (std::size_t j = i; j < s.size(); ++j) {
      if (s[j] < '0' || s[j] > '9') throw Error(ErrorCode::ParseError, "not a rational: '" + text + "'");
    }
    return Integer(s[0] == '+' ? s.substr(1) : s);
  };
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text));
  Integer num = parse_int(text.substr(0, slash));
  Integer den = parse_int(text.substr(slash + 1));
  if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + text + "'");
  return Rational(num, den);
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t mod64(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t inverse_mod64(std::int64_t a, std::int64_t m) {
  std::int64_t old_r = mod64(a, m), r = m;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) throw Error(ErrorCode::NotCoprime, "no inverse of " + std::to_string(a) + " mod " + std::to_string(m));
  return mod64(old_s, m);
}

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t result = n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::int64_t to_int64(const Integer& z) {
  if (z > std::numeric_limits<std::int64_t>::max() || z < std::numeric_limits<std::int64_t>::min()) {
    throw Error(ErrorCode::CapacityExceeded, "integer " + z.str() + " does not fit in 64 bits");
  }
  return z.convert_to<std::int64_t>();
}

}  // namespace hilbasket
