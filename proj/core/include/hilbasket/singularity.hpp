#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hilbasket {

/// Cyclic quotient surface singularity 1/r(1,a) in oriented normal form.
///
/// The pair (r, a) is kept exactly as produced by the orientation-preserving
/// normal form, so 1/r(1,a) and its dual 1/r(1,a') with a*a' = 1 mod r are
/// different values that are isomorphic as singularities. Smooth is r = 1, a = 0.
struct Singularity {
  std::int64_t r = 1;
  std::int64_t a = 0;

  static Singularity smooth() { return {1, 0}; }
  bool is_smooth() const noexcept { return r == 1; }

  std::int64_t width() const;        // k = gcd(r, a+1)
  std::int64_t local_index() const;  // l = r / k
  std::int64_t slope() const;        // c = ((a+1)/k) mod l

  friend auto operator<=>(const Singularity&, const Singularity&) = default;
};

// Validates 1 <= a < r and gcd(r, a) = 1 (or the smooth pair); throws InvalidSingularity.
Singularity make_singularity(std::int64_t r, std::int64_t a);

// Parses "1/r(1,a)" with optional whitespace, or "smooth".
Singularity parse_singularity(const std::string& text);
std::string to_string(const Singularity& s);

struct Vec2 {
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend bool operator==(const Vec2&, const Vec2&) = default;
};

/// Cone spanned by two primitive rays listed clockwise: q*v.x - p*v.y > 0 for u = (p, q).
struct IntCone {
  Vec2 u;
  Vec2 v;
};

Singularity normalize_cone(const IntCone& cone);

struct Invariants {
  std::int64_t ell;
  std::int64_t k;
  std::int64_t c;
};

Invariants invariants(const Singularity& s);

// 1/dn^2(1, dnc - 1)
struct TData {
  std::int64_t d;
  std::int64_t n;
  std::int64_t c;
  Singularity singularity() const { return {d * n * n, d * n * c - 1}; }
  friend bool operator==(const TData&, const TData&) = default;
};

// Composite: width above the local index but not a multiple of it (a T part plus a residual).
enum class Kind { Smooth, TSingularity, Residual, ResidualIndecomposable, Composite };

struct Classification {
  Kind kind;
  std::optional<TData> t;  // set for TSingularity
};

Classification classify(const Singularity& s);
bool is_residual(const Singularity& s);

struct Residue {
  Singularity residue;         // smooth when s is T
  std::vector<TData> t_parts;  // at most one part, of width floor(k/l)*l
};

Residue residue(const Singularity& s);

Singularity dual(const Singularity& s);
bool isomorphic(const Singularity& s, const Singularity& t);
// Representative of the isomorphism class: 1/r(1, min(a, dual a)).
Singularity canonical(const Singularity& s);
// Sort key for isomorphism classes.
std::pair<std::int64_t, std::int64_t> iso_key(const Singularity& s);

Singularity hyperplane_inverse(const Singularity& s);

// s1 * s2 when defined; the operation is not commutative.
std::optional<Singularity> hyperplane_sum(const Singularity& s1, const Singularity& s2);
// Left-to-right sum of a nonempty chain.
std::optional<Singularity> hyperplane_sum(const std::vector<Singularity>& chain);

// Edge point e2 + j*(l, -c) of the normalized cone of s, 0 <= j <= k.
Vec2 edge_point(const Singularity& s, std::int64_t j);
// Interior edge indices 0 < j < k at which the edge point is primitive.
std::vector<std::int64_t> shattering_points(const Singularity& s);
// Shards obtained by cutting s at the given increasing interior indices.
std::vector<Singularity> shards(const Singularity& s, const std::vector<std::int64_t>& cuts);
// Every subset of shattering points, starting with the trivial shattering [s].
std::vector<std::vector<Singularity>> shatterings(const Singularity& s);
// Shattering at all primitive points; its pieces are indecomposable.
std::vector<Singularity> maximal_shards(const Singularity& s);

/// Smallest-width g with s1 * g and g * s2 both defined.
///
/// Returns nullopt when s1 * s2 is already defined (no glue needed).
std::optional<Singularity> gluing_cone(const Singularity& s1, const Singularity& s2);

}  // namespace hilbasket
