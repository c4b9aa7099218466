#include "hilbasket/hilbert.hpp"

#include <mutex>
#include <shared_mutex>
#include <sstream>

#include "hilbasket/error.hpp"
#include "hilbasket/int_matrix.hpp"

namespace hilbasket {

namespace {

template <typename Key, typename Value>
class Memo {
 public:
  template <typename Make>
  const Value& get(const Key& key, Make&& make) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = table_.find(key); it != table_.end()) return it->second;
    }
    Value value = make();
    std::unique_lock lock(mutex_);
    return table_.try_emplace(key, std::move(value)).first->second;
  }

 private:
  std::shared_mutex mutex_;
  std::map<Key, Value> table_;
};

// All delta_{r,a,i} for i = 0..r-1.
const std::vector<Rational>& dedekind_row(std::int64_t r, std::int64_t a) {
  static Memo<std::pair<std::int64_t, std::int64_t>, std::vector<Rational>> memo;
  return memo.get({r, a}, [&] {
    RatPolynomial h(std::vector<Rational>(static_cast<std::size_t>(r), Rational(1)));
    RatPolynomial f = RatPolynomial{Rational(1), Rational(-1)} * to_rational(one_minus_t_pow(static_cast<std::size_t>(a)));
    RatPolynomial u = poly_inverse_mod(f, h);
    Rational total = 0;
    for (const auto& c : u.coeffs()) total += c;
    total /= r;
    std::vector<Rational> row(static_cast<std::size_t>(r));
    for (std::int64_t i = 0; i < r; ++i) row[static_cast<std::size_t>(i)] = u[static_cast<std::size_t>(mod64(-i, r))] - total;
    return row;
  });
}

}  // namespace

Rational dedekind_sum(std::int64_t r, std::int64_t a, std::int64_t i) {
  if (r < 2) throw Error(ErrorCode::InvalidWeight, "dedekind sums need r >= 2");
  if (gcd64(r, a) != 1) {
    throw Error(ErrorCode::InvalidWeight, "gcd(" + std::to_string(r) + ", " + std::to_string(a) + ") != 1");
  }
  return dedekind_row(r, mod64(a, r))[static_cast<std::size_t>(mod64(i, r))];
}

DeltaVector DeltaVector::zero(std::int64_t ell) {
  return {ell, std::vector<Integer>(ell > 2 ? static_cast<std::size_t>(ell - 2) : 0, Integer(0))};
}

std::vector<Integer> DeltaVector::full() const {
  std::vector<Integer> out;
  if (ell < 1) return out;
  out.push_back(0);
  out.insert(out.end(), entries.begin(), entries.end());
  if (ell > 1) out.push_back(0);
  return out;
}

bool DeltaVector::is_zero() const {
  for (const auto& e : entries) {
    if (e != 0) return false;
  }
  return true;
}

bool DeltaVector::is_palindromic() const { return std::equal(entries.begin(), entries.end(), entries.rbegin()); }

IntPolynomial DeltaVector::numerator() const { return IntPolynomial(full()); }

DeltaVector& DeltaVector::operator+=(const DeltaVector& o) {
  if (ell != o.ell || entries.size() != o.entries.size()) {
    throw Error(ErrorCode::LocalIndexMismatch, "adding delta-vectors of local index " + std::to_string(ell) + " and " +
                                                   std::to_string(o.ell));
  }
  for (std::size_t i = 0; i < entries.size(); ++i) entries[i] += o.entries[i];
  return *this;
}

DeltaVector operator-(const DeltaVector& a) {
  DeltaVector out = a;
  for (auto& e : out.entries) e = -e;
  return out;
}

DeltaVector operator*(const Integer& m, const DeltaVector& a) {
  DeltaVector out = a;
  for (auto& e : out.entries) e *= m;
  return out;
}

std::string to_string(const DeltaVector& d, bool full) {
  const std::vector<Integer> v = full ? d.full() : d.entries;
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].str();
  }
  return out + ")";
}

DeltaVector parse_delta(std::int64_t ell, const std::string& text) {
  std::string body;
  for (char ch : text) {
    if (ch != ' ' && ch != '(' && ch != ')' && ch != '[' && ch != ']') body += ch;
  }
  std::vector<Integer> values;
  std::stringstream in(body);
  std::string item;
  while (std::getline(in, item, ',')) {
    Rational q = parse_rational(item);
    if (!is_integral(q)) throw Error(ErrorCode::NonIntegralDelta, "delta entry '" + item + "' is not an integer");
    values.push_back(numerator(q));
  }
  DeltaVector out = DeltaVector::zero(ell);
  if (ell >= 2 && values.size() == static_cast<std::size_t>(ell)) {
    if (values.front() != 0 || values.back() != 0) {
      throw Error(ErrorCode::ParseError, "full delta-vector must start and end with 0");
    }
    values = std::vector<Integer>(values.begin() + 1, values.end() - 1);
  }
  if (values.size() != out.entries.size()) {
    throw Error(ErrorCode::LengthMismatch, "delta-vector at local index " + std::to_string(ell) + " needs " +
                                               std::to_string(out.entries.size()) + " entries");
  }
  out.entries = std::move(values);
  return out;
}

DeltaVector orbifold_contribution(const Singularity& s) {
  const std::int64_t ell = s.local_index();
  if (s.is_smooth() || ell <= 2) return DeltaVector::zero(ell);
  static Memo<std::pair<std::int64_t, std::int64_t>, DeltaVector> memo;
  return memo.get({s.r, s.a}, [&] {
    const std::int64_t r = s.r;
    const std::vector<Rational>& row = dedekind_row(r, s.a);
    std::vector<Rational> numer(static_cast<std::size_t>(r));
    for (std::int64_t i = 1; i <= r; ++i) {
      numer[static_cast<std::size_t>(i - 1)] = row[static_cast<std::size_t>(mod64((s.a + 1) * i, r))] - row[0];
    }
    std::vector<Rational> period(static_cast<std::size_t>(r - ell + 1), Rational(0));
    for (std::int64_t j = 0; j < r; j += ell) period[static_cast<std::size_t>(j)] = 1;
    auto [q, rem] = divmod(RatPolynomial(std::move(numer)), RatPolynomial(std::move(period)));
    if (!rem.is_zero()) throw Error(ErrorCode::ConjectureViolation, "numerator of " + to_string(s) + " is not periodic");
    DeltaVector out = DeltaVector::zero(ell);
    for (std::int64_t i = 0; i < ell; ++i) {
      Rational v = Rational(ell) * q[static_cast<std::size_t>(i)];
      if (!is_integral(v)) throw Error(ErrorCode::NonIntegralDelta, "delta of " + to_string(s) + " is not integral");
      if (i == 0 || i == ell - 1) {
        if (v != 0) throw Error(ErrorCode::ConjectureViolation, "delta of " + to_string(s) + " has nonzero end");
        continue;
      }
      out.entries[static_cast<std::size_t>(i - 1)] = numerator(v);
    }
    return out;
  });
}

RationalFunction contribution_series(const DeltaVector& d) {
  if (d.is_zero()) return RationalFunction();
  return RationalFunction(d.numerator(), Integer(d.ell) * one_minus_t_pow(static_cast<std::size_t>(d.ell)));
}

std::string render_contribution(const DeltaVector& d) {
  if (d.is_zero()) return "0";
  return render_fraction(d.numerator(), Integer(d.ell), one_minus_t_pow(static_cast<std::size_t>(d.ell)));
}

HJExpansion hj_expansion(std::int64_t p, std::int64_t q) {
  if (q <= 0 || p < q) {
    throw Error(ErrorCode::InvalidFraction, std::to_string(p) + "/" + std::to_string(q) + " needs p >= q >= 1");
  }
  HJExpansion out{Rational(p, q), {}};
  if (p == q) return out;
  while (q > 0) {
    const std::int64_t b = (p + q - 1) / q;
    out.terms.push_back(b);
    const std::int64_t next = b * q - p;
    p = q;
    q = next;
  }
  return out;
}

Rational evaluate(const HJExpansion& e) {
  if (e.terms.empty()) return Rational(1);
  Rational acc = e.terms.back();
  for (auto it = e.terms.rbegin() + 1; it != e.terms.rend(); ++it) acc = Rational(*it) - Rational(1) / acc;
  return acc;
}

std::vector<Rational> discrepancies(const HJExpansion& e) {
  // -b_i d_i + d_{i-1} + d_{i+1} = b_i - 2, solved by tridiagonal elimination.
  const std::size_t m = e.terms.size();
  std::vector<Rational> upper(m), rhs(m), d(m);
  for (std::size_t i = 0; i < m; ++i) {
    Rational diag = -Rational(e.terms[i]);
    Rational b = Rational(e.terms[i] - 2);
    if (i > 0) {
      diag -= upper[i - 1];
      b -= rhs[i - 1];
    }
    upper[i] = Rational(1) / diag;
    rhs[i] = b / diag;
  }
  for (std::size_t i = m; i-- > 0;) d[i] = i + 1 < m ? Rational(rhs[i] - upper[i] * d[i + 1]) : rhs[i];
  return d;
}

Rational degree_contribution(const Singularity& s) {
  if (s.is_smooth()) return Rational(1);
  const std::int64_t q = kDegreeFromROverA ? s.a : s.a + 1;
  if (q == s.r) return Rational(s.width(), s.local_index());
  HJExpansion e = hj_expansion(s.r, q);
  std::vector<Rational> d = discrepancies(e);
  Rational a = Rational(static_cast<std::int64_t>(e.terms.size()) + 1);
  for (std::size_t i = 0; i < d.size(); ++i) {
    a -= d[i] * d[i] * e.terms[i];
    if (i + 1 < d.size()) a += 2 * d[i] * d[i + 1];
  }
  return a;
}

BasketContributions basket_contributions(const Basket& basket) {
  BasketContributions out{{}, Rational(0)};
  for (const auto& s : basket) {
    out.total_a += degree_contribution(s);
    const std::int64_t ell = s.local_index();
    if (s.is_smooth() || ell < 3) continue;
    auto it = out.parts.try_emplace(ell, DeltaVector::zero(ell)).first;
    it->second += orbifold_contribution(s);
  }
  return out;
}

DeltaParts nonzero_parts(const DeltaParts& parts) {
  DeltaParts out;
  for (const auto& [ell, d] : parts) {
    if (!d.is_zero()) out.emplace(ell, d);
  }
  return out;
}

RationalFunction initial_term(const Rational& k2) {
  RatPolynomial num{Rational(1), Rational(k2 - 2), Rational(1)};
  RatPolynomial den = to_rational(one_minus_t_pow(1) * one_minus_t_pow(1) * one_minus_t_pow(1));
  return RationalFunction(num, den);
}

HilbertSeries assemble_series(const DeltaParts& parts, const Rational& k2) {
  RationalFunction series = initial_term(k2);
  for (const auto& [ell, d] : parts) series = series + contribution_series(d);
  return {series, k2, parts};
}

HilbertSeries assemble_series(const Basket& basket, const Rational& k2) {
  return assemble_series(basket_contributions(basket).parts, k2);
}

const std::vector<std::vector<Integer>>& delta_lattice_basis(std::int64_t ell) {
  if (ell < 3) throw Error(ErrorCode::UnsupportedIndex, "delta lattice needs local index >= 3");
  static Memo<std::int64_t, std::vector<std::vector<Integer>>> memo;
  return memo.get(ell, [&] {
    std::vector<IntVector> gens;
    for (std::int64_t c = 1; c < ell; ++c) {
      if (gcd64(c, ell) != 1) continue;
      std::int64_t w = 1;
      while (gcd64(ell, w * c - 1) != 1) ++w;
      gens.push_back(orbifold_contribution(Singularity{w * ell, w * c - 1}).entries);
    }
    return lattice_basis(gens, static_cast<std::size_t>(ell - 2));
  });
}

namespace {

enum class SolveStatus { Unique, Inconsistent, Underdetermined };

// Gaussian elimination over Q on the columns of a (rows x cols) system.
SolveStatus solve_rational(std::vector<std::vector<Rational>> a, std::vector<Rational> b, std::vector<Rational>& x) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t p = row;
    while (p < rows && a[p][col] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[row]);
    std::swap(b[p], b[row]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || a[r][col] == 0) continue;
      Rational f = a[r][col] / a[row][col];
      for (std::size_t c = col; c < cols; ++c) a[r][c] -= f * a[row][c];
      b[r] -= f * b[row];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t r = row; r < rows; ++r) {
    if (b[r] != 0) return SolveStatus::Inconsistent;
  }
  if (pivot_col.size() < cols) return SolveStatus::Underdetermined;
  x.assign(cols, Rational(0));
  for (std::size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = b[r] / a[r][pivot_col[r]];
  return SolveStatus::Unique;
}

}  // namespace

SeriesSplit split_series(const RationalFunction& h) {
  const IntPolynomial& den0 = h.den();
  if (den0[0] == 0 || h.num()[0] != den0[0]) throw Error(ErrorCode::NotASurfaceSeries, "series must start with 1");
  if (h.pole_order_at_one() != 3) {
    throw Error(ErrorCode::NotASurfaceSeries, "pole order at t = 1 is " + std::to_string(h.pole_order_at_one()) + ", not 3");
  }
  const IntPolynomial cube = one_minus_t_pow(1) * one_minus_t_pow(1) * one_minus_t_pow(1);
  RationalFunction scaled = h * RationalFunction(cube, IntPolynomial::constant(1));
  SeriesSplit out{Rational(scaled.num().evaluate(Integer(1)), scaled.den().evaluate(Integer(1))), {}};

  RationalFunction rest = h - initial_term(out.k2);
  if (rest.is_zero()) return out;
  const IntPolynomial& d = rest.den();
  const long deg = d.degree();
  std::vector<std::int64_t> ells;
  for (std::int64_t n = 3; n <= 2 * deg * deg + 2; ++n) {
    if (euler_phi(n) > deg) continue;
    if (divmod(to_rational(d), to_rational(cyclotomic(static_cast<std::size_t>(n)))).second.is_zero()) ells.push_back(n);
  }
  if (ells.empty()) throw Error(ErrorCode::NotASurfaceSeries, "remainder has no orbifold denominator");

  // L = lcm of the (1 - t^l); every part becomes a polynomial after scaling by L.
  std::vector<bool> used(static_cast<std::size_t>(ells.back() + 1), false);
  for (std::int64_t ell : ells) {
    for (std::int64_t n = 1; n <= ell; ++n) {
      if (ell % n == 0) used[static_cast<std::size_t>(n)] = true;
    }
  }
  IntPolynomial lcm = IntPolynomial::constant(1);
  for (std::size_t n = 1; n < used.size(); ++n) {
    if (used[n]) lcm = lcm * cyclotomic(n);
  }
  auto [target, leftover] = divmod(to_rational(rest.num() * lcm), to_rational(rest.den()));
  if (!leftover.is_zero()) throw Error(ErrorCode::NotASurfaceSeries, "remainder has a non-orbifold pole");

  std::vector<RatPolynomial> columns;
  std::vector<std::pair<std::int64_t, std::size_t>> owner;
  for (std::int64_t ell : ells) {
    const auto& basis = delta_lattice_basis(ell);
    RatPolynomial scale = Rational(1, ell) * to_rational(exact_divide(lcm, one_minus_t_pow(static_cast<std::size_t>(ell))));
    for (std::size_t j = 0; j < basis.size(); ++j) {
      columns.push_back(to_rational(DeltaVector{ell, basis[j]}.numerator()) * scale);
      owner.emplace_back(ell, j);
    }
  }
  std::size_t rows = static_cast<std::size_t>(std::max<long>(target.degree(), 0)) + 1;
  for (const auto& c : columns) rows = std::max(rows, static_cast<std::size_t>(c.degree() + 1));
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(columns.size()));
  std::vector<Rational> b(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    b[r] = target[r];
    for (std::size_t c = 0; c < columns.size(); ++c) a[r][c] = columns[c][r];
  }
  std::vector<Rational> y;
  switch (solve_rational(std::move(a), std::move(b), y)) {
    case SolveStatus::Inconsistent:
      throw Error(ErrorCode::NotASurfaceSeries, "remainder is not a sum of orbifold contributions");
    case SolveStatus::Underdetermined:
      throw Error(ErrorCode::AmbiguousDecomposition, "orbifold contributions are not uniquely determined");
    case SolveStatus::Unique:
      break;
  }
  std::map<std::int64_t, std::vector<Rational>> sums;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    const auto [ell, j] = owner[c];
    auto& acc = sums.try_emplace(ell, std::vector<Rational>(static_cast<std::size_t>(ell - 2), Rational(0))).first->second;
    const auto& vec = delta_lattice_basis(ell)[j];
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += y[c] * vec[i];
  }
  for (const auto& [ell, acc] : sums) {
    DeltaVector part = DeltaVector::zero(ell);
    for (std::size_t i = 0; i < acc.size(); ++i) {
      if (!is_integral(acc[i])) {
        throw Error(ErrorCode::NonIntegralDelta, "delta-vector at local index " + std::to_string(ell) + " has entry " +
                                                     to_string(acc[i]));
      }
      part.entries[i] = numerator(acc[i]);
    }
    if (!part.is_zero()) out.parts.emplace(ell, std::move(part));
  }
  return out;
}

}  // namespace hilbasket
