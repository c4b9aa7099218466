#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hilbasket/basket.hpp"
#include "hilbasket/hilbert.hpp"
#include "hilbasket/int_matrix.hpp"
#include "hilbasket/singularity.hpp"

namespace hilbasket {

/// The cycle of indecomposable singularities at local index l >= 3.
///
/// Vertex 0 is the first self-dual indecomposable (1/l(1,1) for odd l,
/// 1/2l(1,1) for even l) and vertex i+1 is the successor of vertex i. Vertex i
/// is isomorphic to vertex n-i, so the isomorphism classes of vertices are
/// indexed by min(i, n-i) and the second self-dual sits at n/2.
struct ResidualQuiver {
  std::int64_t ell = 0;
  std::vector<Singularity> vertices;

  std::size_t size() const noexcept { return vertices.size(); }
  std::size_t successor(std::size_t i) const noexcept { return (i + 1) % vertices.size(); }
  std::optional<std::size_t> vertex_index(const Singularity& s) const;

  std::size_t class_count() const noexcept { return vertices.size() / 2 + 1; }
  std::size_t class_of_vertex(std::size_t i) const noexcept { return std::min(i, vertices.size() - i); }
  // Class index of an indecomposable, up to isomorphism.
  std::optional<std::size_t> class_of(const Singularity& s) const;
  // (1, 2, ..., 2, 1): one full cycle in class coordinates.
  std::vector<std::int64_t> cycle_vector() const;
};

// Cached per l; throws UnsupportedIndex for l <= 2.
const ResidualQuiver& residual_quiver(std::int64_t ell);
std::vector<Singularity> indecomposables(std::int64_t ell);
// One full cycle glued left to right starting at the given vertex.
Singularity elementary_T(std::int64_t ell, const Singularity& start);
std::pair<Singularity, Singularity> self_duals(std::int64_t ell);

/// Counts of indecomposables per isomorphism class of quiver vertices.
struct IndecMultiset {
  std::int64_t ell = 0;
  std::vector<std::int64_t> counts;

  static IndecMultiset zero(std::int64_t ell);
  std::int64_t total() const;
  IndecMultiset& operator+=(const IndecMultiset& o);
  friend IndecMultiset operator+(IndecMultiset a, const IndecMultiset& b) { return a += b; }
  friend bool operator==(const IndecMultiset&, const IndecMultiset&) = default;
};

// Consecutive run of quiver vertices; wraps around the cycle.
struct Arc {
  std::size_t start = 0;
  std::size_t length = 0;
  friend bool operator==(const Arc&, const Arc&) = default;
};

Singularity arc_singularity(const ResidualQuiver& q, const Arc& arc);
IndecMultiset arc_rho(const ResidualQuiver& q, const Arc& arc);
// Arc traced by the maximal shattering of s, which must have local index l.
Arc arc_of(const ResidualQuiver& q, const Singularity& s);

// Throws MixedIndex unless every non-smooth element has local index l.
IndecMultiset maximal_shattering(const Basket& basket, std::int64_t ell);
IndecMultiset maximal_shattering(const Basket& basket);

// Every basket (of isomorphism classes) whose maximal shattering is m.
std::vector<Basket> regroupings(const IndecMultiset& m);

/// An isomorphism class of residual singularities at local index l.
struct ResidualClass {
  Singularity rep;  // canonical representative
  Arc arc;
  IndecMultiset rho;
  DeltaVector delta;
  Rational degree;
};

// All residual classes at l, ordered by (r, a) of the representative.
const std::vector<ResidualClass>& residual_classes(std::int64_t ell);

struct DeltaLattice {
  std::int64_t ell = 0;
  std::vector<IntVector> generators;  // delta-vectors of the indecomposables
  std::size_t rank = 0;
  std::vector<IntVector> basis;  // Hermite basis
};

DeltaLattice delta_lattice(std::int64_t ell);

inline constexpr std::size_t kCancelStateCap = 2'000'000;

/// Multiplicities 0 <= x_i <= counts_i, not all zero, with sum x_i * vectors_i = 0.
std::optional<std::vector<std::int64_t>> find_zero_subsum(const std::vector<std::vector<std::int64_t>>& vectors,
                                                          const std::vector<std::int64_t>& counts,
                                                          std::size_t state_cap = kCancelStateCap);

/// Nonempty sub-multiset with zero total orbifold contribution, if any.
///
/// Searches partial delta-sums per local index over distinct elements with
/// multiplicities; throws CapacityExceeded if more than state_cap partial
/// sums would be held at once.
std::optional<Basket> contains_cancelling_tuple(const Basket& basket, std::size_t state_cap = kCancelStateCap);

}  // namespace hilbasket
