#include "hilbasket/rational_function.hpp"

#include <cctype>

namespace hilbasket {

RationalFunction::RationalFunction() : num_(), den_(IntPolynomial::constant(1)) {}

RationalFunction::RationalFunction(IntPolynomial num, IntPolynomial den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorCode::InvalidFraction, "zero denominator");
  normalize();
}

RationalFunction::RationalFunction(const RatPolynomial& num, const RatPolynomial& den) {
  if (den.is_zero()) throw Error(ErrorCode::InvalidFraction, "zero denominator");
  // Bring both over a common integer scale; the ratio is unchanged.
  auto [n, sn] = clear_denominators(num);
  auto [d, sd] = clear_denominators(den);
  num_ = sd * n;
  den_ = sn * d;
  normalize();
}

RationalFunction RationalFunction::constant(const Rational& c) {
  return RationalFunction(IntPolynomial::constant(numerator(c)), IntPolynomial::constant(denominator(c)));
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = IntPolynomial::constant(1);
    return;
  }
  RatPolynomial rn = to_rational(num_), rd = to_rational(den_);
  RatPolynomial g = gcd(rn, rd);
  if (g.degree() > 0) {
    rn = divmod(rn, g).first;
    rd = divmod(rd, g).first;
  }
  auto [n, sn] = clear_denominators(rn);
  auto [d, sd] = clear_denominators(rd);
  IntPolynomial num = sd * n;
  IntPolynomial den = sn * d;
  Integer c = boost::multiprecision::gcd(content(num), content(den));
  if (den[static_cast<std::size_t>(den.valuation())] < 0) c = -c;
  if (c != 1) {
    std::vector<Integer> nv(num.coeffs()), dv(den.coeffs());
    for (auto& x : nv) x /= c;
    for (auto& x : dv) x /= c;
    num = IntPolynomial(std::move(nv));
    den = IntPolynomial(std::move(dv));
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a) { return RationalFunction(-a.num_, a.den_); }

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw Error(ErrorCode::InvalidFraction, "division by the zero function");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

std::vector<Rational> RationalFunction::series(std::size_t terms) const {
  if (den_[0] == 0) throw Error(ErrorCode::InvalidFraction, "pole at t = 0; no power series");
  std::vector<Rational> out(terms, Rational(0));
  const Rational d0(den_[0]);
  for (std::size_t n = 0; n < terms; ++n) {
    Rational acc(num_[n]);
    const std::size_t top = std::min<std::size_t>(n, den_.coeffs().size() - 1);
    for (std::size_t j = 1; j <= top; ++j) acc -= Rational(den_.coeffs()[j]) * out[n - j];
    out[n] = acc / d0;
  }
  return out;
}

namespace {

long multiplicity_of_one(IntPolynomial p) {
  if (p.is_zero()) return 0;
  const IntPolynomial factor{Integer(1), Integer(-1)};
  long m = 0;
  while (p.evaluate(Integer(1)) == 0) {
    p = exact_divide(p, factor);
    ++m;
  }
  return m;
}

}  // namespace

long RationalFunction::pole_order_at_one() const { return multiplicity_of_one(den_) - multiplicity_of_one(num_); }

std::string render_fraction(const IntPolynomial& num, const Integer& scale, const IntPolynomial& den) {
  std::string n = to_string(num);
  bool num_simple = num.coeffs().size() <= 1 || (num.valuation() == num.degree() && num.leading() == 1);
  std::string out = num_simple ? n : "(" + n + ")";
  bool den_one = den == IntPolynomial::constant(1);
  if (den_one && scale == 1) return out;
  if (den_one) return out + "/" + to_string(scale);
  std::string d = "(" + to_string(den) + ")";
  if (scale != 1) d = "(" + to_string(scale) + "*" + d + ")";
  return out + "/" + d;
}

std::string RationalFunction::to_string() const {
  Integer c = content(den_);
  IntPolynomial prim = den_;
  if (c != 1) {
    std::vector<Integer> v(den_.coeffs());
    for (auto& x : v) x /= c;
    prim = IntPolynomial(std::move(v));
  }
  return render_fraction(num_, c, prim);
}

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  RationalFunction parse() {
    RationalFunction value = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError, what + " at position " + std::to_string(pos_) + " in '" + text_ + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Integer integer_literal() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return Integer(text_.substr(start, pos_ - start));
  }

  RationalFunction expr() {
    RationalFunction acc = term();
    for (;;) {
      if (accept('+')) {
        acc = acc + term();
      } else if (accept('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  RationalFunction term() {
    RationalFunction acc = unary();
    for (;;) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        acc = acc / unary();
      } else {
        return acc;
      }
    }
  }

  RationalFunction unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  RationalFunction power() {
    RationalFunction base = primary();
    if (!accept('^')) return base;
    Integer e = integer_literal();
    if (e > 4096) fail("exponent too large");
    RationalFunction acc = RationalFunction::constant(Rational(1));
    for (long i = 0; i < e.convert_to<long>(); ++i) acc = acc * base;
    return acc;
  }

  RationalFunction primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RationalFunction inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == 't') {
      ++pos_;
      return RationalFunction(IntPolynomial{Integer(0), Integer(1)}, IntPolynomial::constant(1));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return RationalFunction::constant(Rational(integer_literal()));
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalFunction parse_rational_function(const std::string& text) { return Parser(text).parse(); }

}  // namespace hilbasket
