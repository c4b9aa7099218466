#include "hilbasket/polynomial.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace hilbasket {

RatPolynomial to_rational(const IntPolynomial& p) {
  std::vector<Rational> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.emplace_back(c);
  return RatPolynomial(std::move(out));
}

std::pair<IntPolynomial, Integer> clear_denominators(const RatPolynomial& p) {
  Integer scale = 1;
  for (const auto& c : p.coeffs()) scale = boost::multiprecision::lcm(scale, denominator(c));
  std::vector<Integer> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(numerator(c) * (scale / denominator(c)));
  return {IntPolynomial(std::move(out)), scale};
}

Integer content(const IntPolynomial& p) {
  Integer g = 0;
  for (const auto& c : p.coeffs()) g = boost::multiprecision::gcd(g, c);
  return boost::multiprecision::abs(g);
}

std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b) {
  if (b.is_zero()) throw Error(ErrorCode::InvalidFraction, "polynomial division by zero");
  std::vector<Rational> rem(a.coeffs());
  const long db = b.degree();
  if (a.degree() < db) return {RatPolynomial(), a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1), Rational(0));
  const Rational& lead = b.leading();
  for (long i = a.degree(); i >= db; --i) {
    const Rational c = rem[static_cast<std::size_t>(i)] / lead;
    if (c == 0) continue;
    quot[static_cast<std::size_t>(i - db)] = c;
    for (long j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
  }
  return {RatPolynomial(std::move(quot)), RatPolynomial(std::move(rem))};
}

namespace {

RatPolynomial make_monic(const RatPolynomial& p) {
  if (p.is_zero()) return p;
  return Rational(1) / p.leading() * p;
}

}  // namespace

RatPolynomial gcd(const RatPolynomial& a, const RatPolynomial& b) {
  RatPolynomial x = a, y = b;
  while (!y.is_zero()) {
    auto r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return make_monic(x);
}

IntPolynomial exact_divide(const IntPolynomial& a, const IntPolynomial& b) {
  auto [q, r] = divmod(to_rational(a), to_rational(b));
  if (!r.is_zero()) throw Error(ErrorCode::InvalidFraction, to_string(b) + " does not divide " + to_string(a));
  std::vector<Integer> out;
  for (const auto& c : q.coeffs()) {
    if (!is_integral(c)) throw Error(ErrorCode::InvalidFraction, "non-integral quotient of " + to_string(a));
    out.push_back(numerator(c));
  }
  return IntPolynomial(std::move(out));
}

RatPolynomial poly_inverse_mod(const RatPolynomial& f, const RatPolynomial& h) {
  if (h.degree() < 1) throw Error(ErrorCode::InvalidFraction, "modulus must have positive degree");
  // Invariant: old_s * f = old_r (mod h), s * f = r (mod h).
  RatPolynomial old_r = divmod(f, h).second, r = h;
  RatPolynomial old_s = RatPolynomial::constant(Rational(1)), s;
  while (!r.is_zero()) {
    auto [q, rem] = divmod(old_r, r);
    old_r = std::exchange(r, std::move(rem));
    RatPolynomial next_s = old_s - q * s;
    old_s = std::exchange(s, std::move(next_s));
  }
  if (old_r.degree() != 0) throw Error(ErrorCode::NotCoprime, "gcd(" + to_string(f) + ", " + to_string(h) + ") is not constant");
  RatPolynomial u = Rational(1) / old_r.leading() * old_s;
  return divmod(u, h).second;
}

namespace {

template <typename Coeff>
std::string render(const Polynomial<Coeff>& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    const Coeff& c = p.coeffs()[i];
    if (c == 0) continue;
    Coeff mag = c < 0 ? Coeff(-c) : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      out << to_string(mag);
      continue;
    }
    if (mag != 1) out << to_string(mag) << "*";
    out << "t";
    if (i > 1) out << "^" << i;
  }
  return out.str();
}

}  // namespace

std::string to_string(const IntPolynomial& p) { return render(p); }
std::string to_string(const RatPolynomial& p) { return render(p); }

IntPolynomial one_minus_t_pow(std::size_t n) {
  std::vector<Integer> c(n + 1, Integer(0));
  c[0] = 1;
  c[n] -= 1;
  return IntPolynomial(std::move(c));
}

IntPolynomial cyclotomic(std::size_t n) {
  static std::mutex mutex;
  static std::map<std::size_t, IntPolynomial> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  // t^n - 1 = prod_{d | n} Phi_d(t)
  IntPolynomial acc = -one_minus_t_pow(n);
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d == 0) acc = exact_divide(acc, cyclotomic(d));
  }
  std::lock_guard lock(mutex);
  cache.emplace(n, acc);
  return acc;
}

}  // namespace hilbasket
