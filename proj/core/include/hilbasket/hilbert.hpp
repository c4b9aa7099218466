#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hilbasket/basket.hpp"
#include "hilbasket/numbers.hpp"
#include "hilbasket/polynomial.hpp"
#include "hilbasket/rational_function.hpp"
#include "hilbasket/singularity.hpp"

namespace hilbasket {

/// (1/r) * sum over nontrivial r-th roots xi of xi^i / ((1 - xi)(1 - xi^a)).
Rational dedekind_sum(std::int64_t r, std::int64_t a, std::int64_t i);

/// Numerator coefficients of an orbifold contribution written over l(1 - t^l).
///
/// Only delta_1 .. delta_{l-2} are stored; delta_0 and delta_{l-1} vanish.
struct DeltaVector {
  std::int64_t ell = 0;
  std::vector<Integer> entries;

  static DeltaVector zero(std::int64_t ell);
  std::vector<Integer> full() const;
  bool is_zero() const;
  bool is_palindromic() const;
  IntPolynomial numerator() const;

  DeltaVector& operator+=(const DeltaVector& o);
  friend DeltaVector operator+(DeltaVector a, const DeltaVector& b) { return a += b; }
  friend DeltaVector operator-(const DeltaVector& a);
  friend DeltaVector operator-(const DeltaVector& a, const DeltaVector& b) { return a + (-b); }
  friend DeltaVector operator*(const Integer& m, const DeltaVector& a);
  friend bool operator==(const DeltaVector&, const DeltaVector&) = default;
};

// "(1,-2,1)", or "(0,1,-2,1,0)" with full.
std::string to_string(const DeltaVector& d, bool full = false);
// Accepts the abbreviated form of length l-2 or the full form of length l.
DeltaVector parse_delta(std::int64_t ell, const std::string& text);

DeltaVector orbifold_contribution(const Singularity& s);
// delta-numerator / (l (1 - t^l))
RationalFunction contribution_series(const DeltaVector& d);
std::string render_contribution(const DeltaVector& d);

struct HJExpansion {
  Rational target;
  std::vector<std::int64_t> terms;
};

HJExpansion hj_expansion(std::int64_t p, std::int64_t q);
Rational evaluate(const HJExpansion& e);
std::vector<Rational> discrepancies(const HJExpansion& e);

// The resolution of 1/r(1,a) is read off the continued fraction of r/a.
inline constexpr bool kDegreeFromROverA = true;

Rational degree_contribution(const Singularity& s);

using DeltaParts = std::map<std::int64_t, DeltaVector>;

struct BasketContributions {
  DeltaParts parts;  // one entry per local index >= 3 present
  Rational total_a;
};

BasketContributions basket_contributions(const Basket& basket);

// Parts with zero delta-vector removed.
DeltaParts nonzero_parts(const DeltaParts& parts);

struct HilbertSeries {
  RationalFunction series;
  Rational k2;
  DeltaParts parts;
};

// (1 + (K^2 - 2) t + t^2) / (1 - t)^3
RationalFunction initial_term(const Rational& k2);
HilbertSeries assemble_series(const DeltaParts& parts, const Rational& k2);
HilbertSeries assemble_series(const Basket& basket, const Rational& k2);

struct SeriesSplit {
  Rational k2;
  DeltaParts parts;  // nonzero parts only
};

SeriesSplit split_series(const RationalFunction& h);

// Hermite basis of the lattice spanned by the indecomposable delta-vectors at l >= 3.
const std::vector<std::vector<Integer>>& delta_lattice_basis(std::int64_t ell);

}  // namespace hilbasket
