#include "hilbasket/quiver.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <set>

#include "hilbasket/error.hpp"

namespace hilbasket {

namespace {

bool primitive(const Vec2& v) { return gcd64(v.x, v.y) == 1; }

Singularity successor_of(const Singularity& s) {
  const std::int64_t k = s.width();
  std::int64_t j = k + 1;
  while (!primitive(edge_point(s, j))) ++j;
  return normalize_cone({edge_point(s, k), edge_point(s, j)});
}

ResidualQuiver build_quiver(std::int64_t ell) {
  ResidualQuiver q;
  q.ell = ell;
  const Singularity start = ell % 2 ? Singularity{ell, 1} : Singularity{2 * ell, 1};
  const auto n = static_cast<std::size_t>(euler_phi(ell));
  Singularity cur = start;
  do {
    q.vertices.push_back(cur);
    if (q.vertices.size() > n) break;
    cur = successor_of(cur);
  } while (cur != start);
  auto fail = [&](const std::string& what) {
    throw Error(ErrorCode::ConjectureViolation, "residual quiver at local index " + std::to_string(ell) + ": " + what);
  };
  if (q.vertices.size() != n) fail("cycle length " + std::to_string(q.vertices.size()) + " != phi(l)");
  std::int64_t width = 0;
  for (std::size_t i = 0; i < n; ++i) {
    width += q.vertices[i].width();
    if (!isomorphic(q.vertices[i], q.vertices[(n - i) % n])) fail("vertex " + std::to_string(i) + " has no mirror");
  }
  if (width != ell) fail("widths sum to " + std::to_string(width));
  return q;
}

bool fits(const IndecMultiset& part, const IndecMultiset& whole) {
  for (std::size_t i = 0; i < part.counts.size(); ++i) {
    if (part.counts[i] > whole.counts[i]) return false;
  }
  return true;
}

}  // namespace

std::optional<std::size_t> ResidualQuiver::vertex_index(const Singularity& s) const {
  auto it = std::find(vertices.begin(), vertices.end(), s);
  if (it == vertices.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vertices.begin());
}

std::optional<std::size_t> ResidualQuiver::class_of(const Singularity& s) const {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (isomorphic(vertices[i], s)) return class_of_vertex(i);
  }
  return std::nullopt;
}

std::vector<std::int64_t> ResidualQuiver::cycle_vector() const {
  std::vector<std::int64_t> v(class_count(), 2);
  v.front() = 1;
  v.back() = 1;
  return v;
}

const ResidualQuiver& residual_quiver(std::int64_t ell) {
  if (ell <= 2) throw Error(ErrorCode::UnsupportedIndex, "no residual singularities at local index " + std::to_string(ell));
  static std::mutex mutex;
  static std::map<std::int64_t, std::unique_ptr<ResidualQuiver>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[ell];
  if (!slot) slot = std::make_unique<ResidualQuiver>(build_quiver(ell));
  return *slot;
}

std::vector<Singularity> indecomposables(std::int64_t ell) { return residual_quiver(ell).vertices; }

Singularity elementary_T(std::int64_t ell, const Singularity& start) {
  const ResidualQuiver& q = residual_quiver(ell);
  auto i = q.vertex_index(start);
  if (!i) throw Error(ErrorCode::NotResidual, to_string(start) + " is not a quiver vertex at local index " + std::to_string(ell));
  return arc_singularity(q, {*i, q.size()});
}

std::pair<Singularity, Singularity> self_duals(std::int64_t ell) {
  const ResidualQuiver& q = residual_quiver(ell);
  return {q.vertices.front(), q.vertices[q.size() / 2]};
}

IndecMultiset IndecMultiset::zero(std::int64_t ell) {
  return {ell, std::vector<std::int64_t>(residual_quiver(ell).class_count(), 0)};
}

std::int64_t IndecMultiset::total() const {
  std::int64_t t = 0;
  for (auto c : counts) t += c;
  return t;
}

IndecMultiset& IndecMultiset::operator+=(const IndecMultiset& o) {
  if (ell != o.ell) throw Error(ErrorCode::MixedIndex, "adding multisets of different local index");
  for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += o.counts[i];
  return *this;
}

Singularity arc_singularity(const ResidualQuiver& q, const Arc& arc) {
  std::vector<Singularity> chain;
  for (std::size_t i = 0; i < arc.length; ++i) chain.push_back(q.vertices[(arc.start + i) % q.size()]);
  auto s = hyperplane_sum(chain);
  if (!s) throw Error(ErrorCode::ConjectureViolation, "quiver arc does not glue");
  return *s;
}

IndecMultiset arc_rho(const ResidualQuiver& q, const Arc& arc) {
  IndecMultiset m{q.ell, std::vector<std::int64_t>(q.class_count(), 0)};
  for (std::size_t i = 0; i < arc.length; ++i) ++m.counts[q.class_of_vertex((arc.start + i) % q.size())];
  return m;
}

Arc arc_of(const ResidualQuiver& q, const Singularity& s) {
  if (s.local_index() != q.ell) throw Error(ErrorCode::MixedIndex, to_string(s) + " has another local index");
  const std::vector<Singularity> pieces = maximal_shards(s);
  auto first = q.vertex_index(pieces.front());
  if (!first) throw Error(ErrorCode::ConjectureViolation, "shard of " + to_string(s) + " is not a quiver vertex");
  for (std::size_t i = 1; i < pieces.size(); ++i) {
    if (pieces[i] != q.vertices[(*first + i) % q.size()]) {
      throw Error(ErrorCode::ConjectureViolation, "shards of " + to_string(s) + " do not follow the quiver");
    }
  }
  return {*first, pieces.size()};
}

IndecMultiset maximal_shattering(const Basket& basket, std::int64_t ell) {
  const ResidualQuiver& q = residual_quiver(ell);
  IndecMultiset m = IndecMultiset::zero(ell);
  for (const auto& s : basket) {
    if (s.is_smooth()) continue;
    if (s.local_index() != ell) {
      throw Error(ErrorCode::MixedIndex, to_string(s) + " does not have local index " + std::to_string(ell));
    }
    m += arc_rho(q, arc_of(q, s));
  }
  return m;
}

IndecMultiset maximal_shattering(const Basket& basket) {
  for (const auto& s : basket) {
    if (!s.is_smooth()) return maximal_shattering(basket, s.local_index());
  }
  throw Error(ErrorCode::UnsupportedIndex, "basket has no singular points to fix a local index");
}

std::vector<Basket> regroupings(const IndecMultiset& m) {
  const ResidualQuiver& q = residual_quiver(m.ell);
  struct Item {
    Singularity rep;
    IndecMultiset rho;
  };
  std::vector<Item> items;
  std::set<Singularity> seen;
  const auto total = static_cast<std::size_t>(m.total());
  for (std::size_t start = 0; start < q.size(); ++start) {
    for (std::size_t len = 1; len <= total; ++len) {
      IndecMultiset rho = arc_rho(q, {start, len});
      if (!fits(rho, m)) break;
      Singularity rep = canonical(arc_singularity(q, {start, len}));
      if (seen.insert(rep).second) items.push_back({rep, std::move(rho)});
    }
  }
  std::set<Basket> out;
  Basket current;
  IndecMultiset remaining = m;
  auto dfs = [&](auto&& self, std::size_t i) -> void {
    if (remaining.total() == 0) {
      out.insert(sorted_basket(current));
      return;
    }
    if (i == items.size()) return;
    std::int64_t taken = 0;
    while (fits(items[i].rho, remaining)) {
      for (std::size_t c = 0; c < remaining.counts.size(); ++c) remaining.counts[c] -= items[i].rho.counts[c];
      current.push_back(items[i].rep);
      ++taken;
    }
    for (; taken >= 0; --taken) {
      self(self, i + 1);
      if (taken == 0) break;
      for (std::size_t c = 0; c < remaining.counts.size(); ++c) remaining.counts[c] += items[i].rho.counts[c];
      current.pop_back();
    }
  };
  dfs(dfs, 0);
  return {out.begin(), out.end()};
}

const std::vector<ResidualClass>& residual_classes(std::int64_t ell) {
  static std::mutex mutex;
  static std::map<std::int64_t, std::unique_ptr<std::vector<ResidualClass>>> cache;
  const ResidualQuiver& q = residual_quiver(ell);
  std::lock_guard lock(mutex);
  auto& slot = cache[ell];
  if (slot) return *slot;
  std::map<Singularity, ResidualClass> found;
  for (std::size_t start = 0; start < q.size(); ++start) {
    std::int64_t width = 0;
    for (std::size_t len = 1; len < q.size(); ++len) {
      width += q.vertices[(start + len - 1) % q.size()].width();
      if (width >= ell) break;
      const Arc arc{start, len};
      Singularity rep = canonical(arc_singularity(q, arc));
      if (found.count(rep)) continue;
      found.emplace(rep, ResidualClass{rep, arc, arc_rho(q, arc), orbifold_contribution(rep), degree_contribution(rep)});
    }
  }
  auto classes = std::make_unique<std::vector<ResidualClass>>();
  for (auto& [rep, cls] : found) classes->push_back(std::move(cls));
  slot = std::move(classes);
  return *slot;
}

DeltaLattice delta_lattice(std::int64_t ell) {
  DeltaLattice out;
  out.ell = ell;
  if (ell <= 2) return out;
  for (const auto& s : residual_quiver(ell).vertices) out.generators.push_back(orbifold_contribution(s).entries);
  out.basis = lattice_basis(out.generators, static_cast<std::size_t>(ell - 2));
  out.rank = out.basis.size();
  return out;
}

std::optional<std::vector<std::int64_t>> find_zero_subsum(const std::vector<std::vector<std::int64_t>>& vectors,
                                                          const std::vector<std::int64_t>& counts, std::size_t state_cap) {
  if (vectors.size() != counts.size()) throw Error(ErrorCode::LengthMismatch, "one count per vector required");
  if (vectors.empty()) return std::nullopt;
  const std::size_t dim = vectors.front().size();
  struct State {
    std::vector<std::int64_t> sum;
    bool nonempty;
    std::size_t parent;
    std::int64_t used;
  };
  std::vector<std::vector<State>> layers(1);
  layers[0].push_back({std::vector<std::int64_t>(dim, 0), false, 0, 0});
  std::size_t live = 1;

  auto witness = [&](std::size_t layer, std::size_t idx) {
    std::vector<std::int64_t> x(vectors.size(), 0);
    for (std::size_t l = layer; l > 0; --l) {
      x[l - 1] = layers[l][idx].used;
      idx = layers[l][idx].parent;
    }
    return x;
  };

  for (std::size_t i = 0; i < vectors.size(); ++i) {
    std::map<std::pair<std::vector<std::int64_t>, bool>, std::size_t> index;
    std::vector<State> next;
    const std::vector<State>& prev = layers.back();
    for (std::size_t p = 0; p < prev.size(); ++p) {
      std::vector<std::int64_t> sum = prev[p].sum;
      for (std::int64_t c = 0; c <= counts[i]; ++c) {
        if (c > 0) {
          for (std::size_t d = 0; d < dim; ++d) sum[d] += vectors[i][d];
        }
        const bool nonempty = prev[p].nonempty || c > 0;
        if (!index.try_emplace({sum, nonempty}, next.size()).second) continue;
        next.push_back({sum, nonempty, p, c});
        if (++live > state_cap) {
          throw Error(ErrorCode::CapacityExceeded, "cancelling-tuple search exceeded " + std::to_string(state_cap) + " states");
        }
        if (nonempty && std::all_of(sum.begin(), sum.end(), [](std::int64_t v) { return v == 0; })) {
          layers.push_back(std::move(next));
          return witness(layers.size() - 1, layers.back().size() - 1);
        }
      }
    }
    layers.push_back(std::move(next));
  }
  return std::nullopt;
}

std::optional<Basket> contains_cancelling_tuple(const Basket& basket, std::size_t state_cap) {
  std::map<std::int64_t, std::map<Singularity, std::int64_t>> pieces;
  for (const auto& s : basket) {
    if (s.is_smooth()) continue;
    if (orbifold_contribution(s).is_zero()) return Basket{s};
    ++pieces[s.local_index()][canonical(s)];
  }
  for (const auto& [ell, items] : pieces) {
    std::vector<std::vector<std::int64_t>> vectors;
    std::vector<std::int64_t> counts;
    std::vector<Singularity> reps;
    for (const auto& [rep, count] : items) {
      std::vector<std::int64_t> v;
      for (const auto& e : orbifold_contribution(rep).entries) v.push_back(to_int64(e));
      vectors.push_back(std::move(v));
      counts.push_back(count);
      reps.push_back(rep);
    }
    if (auto x = find_zero_subsum(vectors, counts, state_cap)) {
      Basket out;
      for (std::size_t i = 0; i < reps.size(); ++i) out.insert(out.end(), static_cast<std::size_t>((*x)[i]), reps[i]);
      return out;
    }
  }
  return std::nullopt;
}

}  // namespace hilbasket
