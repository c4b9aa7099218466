#include "hilbasket/reconstruct.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <memory>
#include <mutex>
#include <set>
#include <thread>

#include "hilbasket/error.hpp"

namespace hilbasket {

namespace {

std::size_t class_index(const std::vector<ResidualClass>& classes, const Singularity& s) {
  const Singularity rep = canonical(s);
  auto it = std::lower_bound(classes.begin(), classes.end(), rep,
                             [](const ResidualClass& c, const Singularity& key) { return c.rep < key; });
  if (it == classes.end() || it->rep != rep) throw Error(ErrorCode::NotResidual, to_string(s) + " is not a residual class");
  return static_cast<std::size_t>(it - classes.begin());
}

ResPlus build_res_plus(std::int64_t ell) {
  const auto& classes = residual_classes(ell);
  std::set<std::pair<Singularity, Singularity>> pairs;
  for (const auto& c : classes) {
    Singularity inv = canonical(hyperplane_inverse(c.rep));
    pairs.insert({std::min(c.rep, inv), std::max(c.rep, inv)});
  }
  ResPlus rp;
  rp.ell = ell;
  std::vector<IntVector> columns;
  for (const auto& [lo, hi] : pairs) {
    const DeltaVector& dlo = classes[class_index(classes, lo)].delta;
    if (dlo.entries.empty() || dlo.entries[0] == 0) {
      throw Error(ErrorCode::ConjectureViolation, to_string(lo) + " has vanishing first delta entry");
    }
    const bool keep_lo = dlo.entries[0] > 0;
    rp.members.push_back(keep_lo ? lo : hi);
    rp.inverses.push_back(keep_lo ? hi : lo);
    columns.push_back(classes[class_index(classes, rp.members.back())].delta.entries);
  }
  rp.phi = IntMatrix::from_columns(static_cast<std::size_t>(ell - 2), columns);
  return rp;
}

constexpr std::int64_t kCycleMultiple = 3;

// Sub-multiset sums of indecomposable counts inside the box [0, K*cycle], as a bitset over box cells.
class CycleBox {
 public:
  using Reach = std::vector<std::uint64_t>;

  struct Item {
    std::vector<std::int64_t> rho;
    std::size_t offset = 0;
    std::int64_t fit = 0;  // copies that fit in the box
    Reach mask;            // cells that stay inside after one more copy
  };

  CycleBox(const std::vector<std::int64_t>& cycle, std::int64_t multiple) : cycle_(cycle), stride_(cycle.size()) {
    std::size_t size = 1;
    for (std::size_t c = 0; c < cycle_.size(); ++c) {
      cap_.push_back(multiple * cycle_[c]);
      stride_[c] = size;
      size *= static_cast<std::size_t>(cap_[c] + 1);
    }
    size_ = size;
    words_ = (size + 63) / 64;
    for (std::int64_t j = 1; j <= multiple; ++j) {
      std::size_t idx = 0;
      for (std::size_t c = 0; c < cap_.size(); ++c) idx += static_cast<std::size_t>(j * cycle_[c]) * stride_[c];
      cycles_.push_back(idx);
    }
  }

  Reach empty() const {
    Reach r(words_, 0);
    r[0] = 1;
    return r;
  }

  Item item(const std::vector<std::int64_t>& rho) const {
    Item it{rho, 0, std::numeric_limits<std::int64_t>::max(), Reach(words_, 0)};
    for (std::size_t c = 0; c < cap_.size(); ++c) {
      if (rho[c] == 0) continue;
      it.fit = std::min(it.fit, cap_[c] / rho[c]);
      it.offset += static_cast<std::size_t>(rho[c]) * stride_[c];
    }
    for (std::size_t idx = 0; idx < size_; ++idx) {
      std::size_t rest = idx;
      bool inside = true;
      for (std::size_t c = 0; c < cap_.size() && inside; ++c) {
        const auto extent = static_cast<std::size_t>(cap_[c] + 1);
        inside = static_cast<std::int64_t>(rest % extent) + rho[c] <= cap_[c];
        rest /= extent;
      }
      if (inside) it.mask[idx / 64] |= std::uint64_t{1} << (idx % 64);
    }
    return it;
  }

  // Adds `times` copies of the item.
  void add(Reach& reach, const Item& it, std::int64_t times) const {
    const std::int64_t rounds = std::min(times, it.fit);
    const std::size_t ws = it.offset / 64, bs = it.offset % 64;
    for (std::int64_t t = 0; t < rounds; ++t) {
      bool grew = false;
      for (std::size_t w = words_; w-- > ws;) {
        const std::size_t src = w - ws;
        std::uint64_t in = (reach[src] & it.mask[src]) << bs;
        if (bs != 0 && src > 0) in |= (reach[src - 1] & it.mask[src - 1]) >> (64 - bs);
        if (in & ~reach[w]) {
          reach[w] |= in;
          grew = true;
        }
      }
      if (!grew) break;
    }
  }

  bool hits_cycle(const Reach& reach) const {
    for (std::size_t idx : cycles_) {
      if (test(reach, idx)) return true;
    }
    return false;
  }

  // Copies of the item that can join a multiset with this reach before a cycle multiple becomes reachable; -1 for unbounded.
  std::int64_t allowance(const Reach& reach, const Item& it) const {
    for (std::int64_t k = 1;; ++k) {
      bool any = false;
      for (std::size_t j = 1; j <= cycles_.size(); ++j) {
        std::size_t idx = 0;
        bool fits = true;
        for (std::size_t c = 0; c < cap_.size() && fits; ++c) {
          const std::int64_t rest = static_cast<std::int64_t>(j) * cycle_[c] - k * it.rho[c];
          fits = rest >= 0;
          if (fits) idx += static_cast<std::size_t>(rest) * stride_[c];
        }
        if (!fits) continue;
        any = true;
        if (test(reach, idx)) return k - 1;
      }
      if (!any) return -1;
    }
  }

 private:
  static bool test(const Reach& reach, std::size_t idx) { return (reach[idx / 64] >> (idx % 64)) & 1U; }

  std::vector<std::int64_t> cycle_;
  std::vector<std::int64_t> cap_;
  std::vector<std::size_t> stride_;
  std::vector<std::size_t> cycles_;
  std::size_t size_ = 0;
  std::size_t words_ = 0;
};

class Sweep {
 public:
  Sweep(std::int64_t ell, const EnumerateOptions& opts, std::atomic<std::uint64_t>& nodes)
      : classes_(residual_classes(ell)), box_(residual_quiver(ell).cycle_vector(), kCycleMultiple), opts_(opts), nodes_(nodes) {
    for (std::size_t i = 0; i < classes_.size(); ++i) {
      if (classes_[i].rho.total() >= 2) {
        multi_.push_back(i);
      } else {
        single_.resize(classes_[i].rho.counts.size());
        for (std::size_t c = 0; c < classes_[i].rho.counts.size(); ++c) {
          if (classes_[i].rho.counts[c] == 1) single_[c] = i;
        }
      }
      items_.push_back(box_.item(classes_[i].rho.counts));
      std::vector<std::int64_t> d;
      for (const auto& e : classes_[i].delta.entries) d.push_back(to_int64(e));
      delta_.push_back(std::move(d));
    }
    std::stable_sort(multi_.begin(), multi_.end(),
                     [&](std::size_t a, std::size_t b) { return classes_[a].rho.total() > classes_[b].rho.total(); });
    // coordinates no later multi item touches get their singles as soon as the last one is placed
    sealed_.resize(multi_.size() + 1);
    for (std::size_t c = 0; c < single_.size(); ++c) {
      std::size_t last = 0;
      for (std::size_t i = 0; i < multi_.size(); ++i) {
        if (classes_[multi_[i]].rho.counts[c] > 0) last = i + 1;
      }
      sealed_[last].push_back(c);
      seal_depth_.push_back(last);
    }
    future_.resize(multi_.size() + 1);
    for (std::size_t d = 0; d <= multi_.size(); ++d) {
      for (std::size_t i = d; i < multi_.size(); ++i) future_[d].push_back(multi_[i]);
      for (std::size_t later = d + 1; later <= multi_.size(); ++later) {
        for (std::size_t c : sealed_[later]) future_[d].push_back(single_[c]);
      }
    }
    for (std::size_t d = 0; d <= multi_.size(); ++d) allowed_.emplace_back(future_[d].size());
    const std::size_t dims = single_.size();
    std::size_t combos = 1;
    for (std::size_t c = 0; c < dims && combos < kMaxWeights; ++c) combos *= 3;
    if (combos >= kMaxWeights) {
      for (std::size_t c = 0; c < dims; ++c) {
        weights_.emplace_back(dims, 0);
        weights_.back()[c] = 1;
      }
    } else {
      for (std::size_t code = 1; code < combos; ++code) {
        std::vector<std::int64_t> w(dims);
        std::size_t rest = code;
        for (std::size_t c = 0; c < dims; ++c, rest /= 3) w[c] = static_cast<std::int64_t>(rest % 3) - 1;
        weights_.push_back(std::move(w));
      }
    }
    for (const auto& w : weights_) {
      std::vector<std::int64_t> g;
      for (const auto& cls : classes_) {
        std::int64_t dot = 0;
        for (std::size_t c = 0; c < dims; ++c) dot += w[c] * cls.rho.counts[c];
        g.push_back(dot);
      }
      gains_.push_back(std::move(g));
    }
    reach_.assign(multi_.size() + 1, box_.empty());
    partial_.assign(multi_.size(), box_.empty());
  }

  // Cancelling-tuple-free baskets whose maximal shattering is exactly target.
  std::vector<std::vector<std::int64_t>> run(const std::vector<std::int64_t>& target) {
    std::vector<std::vector<std::int64_t>> found;
    std::vector<std::int64_t> counts(classes_.size(), 0);
    std::vector<std::int64_t> remaining = target;
    reach_[0] = box_.empty();
    if (seal(reach_[0], 0, remaining)) dfs(0, remaining, counts, found);
    flush();
    return found;
  }

 private:
  static constexpr std::uint64_t kBatch = 4096;
  static constexpr std::size_t kMaxWeights = 1000;

  void flush() {
    if (pending_ == 0) return;
    const std::uint64_t total = nodes_ += pending_;
    pending_ = 0;
    if (total > opts_.node_budget) {
      throw Error(ErrorCode::CapacityExceeded, "reduced-body search exceeded " + std::to_string(opts_.node_budget) + " nodes");
    }
  }

  // Adds the singles of coordinates sealed at this depth; false once the cycle is reachable.
  bool seal(CycleBox::Reach& reach, std::size_t depth, const std::vector<std::int64_t>& remaining) {
    for (std::size_t c : sealed_[depth]) {
      if (remaining[c] > 0) box_.add(reach, items_[single_[c]], remaining[c]);
    }
    if (box_.hits_cycle(reach)) return false;
    // what is left must fit into the copies the reach still allows, tested along each weight
    std::vector<std::int64_t>& allowed = allowed_[depth];
    for (std::size_t f = 0; f < future_[depth].size(); ++f) allowed[f] = box_.allowance(reach, items_[future_[depth][f]]);
    for (std::size_t w = 0; w < weights_.size(); ++w) {
      std::int64_t need = 0;
      for (std::size_t c = 0; c < remaining.size(); ++c) {
        if (seal_depth_[c] > depth) need += weights_[w][c] * remaining[c];
      }
      if (need <= 0) continue;
      std::int64_t room = 0;
      bool unbounded = false;
      for (std::size_t f = 0; f < future_[depth].size() && !unbounded; ++f) {
        const std::int64_t gain = gains_[w][future_[depth][f]];
        if (gain <= 0) continue;
        if (allowed[f] < 0) unbounded = true;
        room += allowed[f] * gain;
      }
      if (!unbounded && need > room) return false;
    }
    return true;
  }

  void dfs(std::size_t i, std::vector<std::int64_t>& remaining, std::vector<std::int64_t>& counts,
           std::vector<std::vector<std::int64_t>>& found) {
    if (++pending_ >= kBatch) flush();
    if (i == multi_.size()) {
      leaf(remaining, counts, found);
      return;
    }
    const std::size_t item = multi_[i];
    const auto& rho = classes_[item].rho.counts;
    std::int64_t most = -1;
    for (std::size_t c = 0; c < rho.size(); ++c) {
      if (rho[c] == 0) continue;
      const std::int64_t fit = remaining[c] / rho[c];
      most = most < 0 ? fit : std::min(most, fit);
    }
    CycleBox::Reach& copies = partial_[i];
    copies = reach_[i];
    for (std::int64_t n = 0; n <= most; ++n) {
      if (n > 0) {
        // one more copy on top of the n-1 already added
        box_.add(copies, items_[item], 1);
        if (box_.hits_cycle(copies)) break;
        for (std::size_t c = 0; c < rho.size(); ++c) remaining[c] -= rho[c];
      }
      counts[item] = n;
      reach_[i + 1] = copies;
      if (seal(reach_[i + 1], i + 1, remaining)) dfs(i + 1, remaining, counts, found);
    }
    const std::int64_t used = counts[item];
    for (std::size_t c = 0; c < rho.size(); ++c) remaining[c] += used * rho[c];
    counts[item] = 0;
  }

  void leaf(const std::vector<std::int64_t>& remaining, std::vector<std::int64_t>& counts,
            std::vector<std::vector<std::int64_t>>& found) {
    std::vector<std::int64_t> full = counts;
    for (std::size_t c = 0; c < remaining.size(); ++c) full[single_[c]] += remaining[c];
    std::vector<std::vector<std::int64_t>> vectors;
    std::vector<std::int64_t> mult;
    for (std::size_t i = 0; i < full.size(); ++i) {
      if (full[i] == 0) continue;
      vectors.push_back(delta_[i]);
      mult.push_back(full[i]);
    }
    if (find_zero_subsum(vectors, mult)) return;
    found.push_back(std::move(full));
  }

  const std::vector<ResidualClass>& classes_;
  CycleBox box_;
  EnumerateOptions opts_;
  std::atomic<std::uint64_t>& nodes_;
  std::uint64_t pending_ = 0;
  std::vector<std::size_t> multi_;
  std::vector<std::size_t> single_;
  std::vector<std::vector<std::int64_t>> delta_;
  std::vector<std::vector<std::size_t>> sealed_;
  std::vector<std::vector<std::size_t>> future_;
  std::vector<std::size_t> seal_depth_;
  std::vector<CycleBox::Item> items_;
  std::vector<std::vector<std::int64_t>> allowed_;
  std::vector<std::vector<std::int64_t>> weights_;
  std::vector<std::vector<std::int64_t>> gains_;  // weight . rho per class
  std::vector<CycleBox::Reach> reach_;  // reachable sub-sums per DFS depth
  std::vector<CycleBox::Reach> partial_;
};

Basket basket_from_counts(const std::vector<ResidualClass>& classes, const std::vector<std::int64_t>& counts) {
  Basket b;
  for (std::size_t i = 0; i < counts.size(); ++i) b.insert(b.end(), static_cast<std::size_t>(counts[i]), classes[i].rep);
  return sorted_basket(b);
}

}  // namespace

const ResPlus& res_plus(std::int64_t ell) {
  static std::mutex mutex;
  static std::map<std::int64_t, std::unique_ptr<ResPlus>> cache;
  residual_classes(ell);
  std::lock_guard lock(mutex);
  auto& slot = cache[ell];
  if (!slot) slot = std::make_unique<ResPlus>(build_res_plus(ell));
  return *slot;
}

Basket interpret(const ResPlus& rp, const std::vector<std::int64_t>& coords) {
  if (coords.size() != rp.members.size()) throw Error(ErrorCode::LengthMismatch, "one coordinate per Res+ member required");
  Basket b;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const Singularity& s = coords[i] >= 0 ? rp.members[i] : rp.inverses[i];
    b.insert(b.end(), static_cast<std::size_t>(coords[i] >= 0 ? coords[i] : -coords[i]), s);
  }
  return sorted_basket(b);
}

std::vector<std::int64_t> signed_coordinates(const ResPlus& rp, const Basket& basket) {
  std::vector<std::int64_t> plus(rp.members.size(), 0), minus(rp.members.size(), 0);
  for (const auto& s : basket) {
    const Singularity c = canonical(s);
    auto m = std::find(rp.members.begin(), rp.members.end(), c);
    if (m != rp.members.end()) {
      ++plus[static_cast<std::size_t>(m - rp.members.begin())];
      continue;
    }
    auto inv = std::find(rp.inverses.begin(), rp.inverses.end(), c);
    if (inv == rp.inverses.end()) throw Error(ErrorCode::NotResidual, to_string(s) + " is not residual at this local index");
    ++minus[static_cast<std::size_t>(inv - rp.inverses.begin())];
  }
  std::vector<std::int64_t> out(rp.members.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (plus[i] && minus[i]) throw Error(ErrorCode::NotRealizable, "basket contains a cancelling pair");
    out[i] = plus[i] - minus[i];
  }
  return out;
}

ReducedBody enumerate_reduced_baskets(std::int64_t ell, const DeltaVector& delta, const EnumerateOptions& opts) {
  if (delta.ell != ell) throw Error(ErrorCode::LocalIndexMismatch, "delta-vector belongs to another local index");
  if (!delta.is_palindromic()) throw Error(ErrorCode::NotRealizable, "delta-vector " + to_string(delta) + " is not palindromic");
  ReducedBody out;
  out.ell = ell;
  out.delta = delta;
  const ResPlus& rp = res_plus(ell);
  const ResidualQuiver& q = residual_quiver(ell);
  const auto& classes = residual_classes(ell);
  out.kernel_basis = int_kernel(rp.phi);
  auto x0 = int_solve(rp.phi, delta.entries);
  if (!x0) return out;
  out.realizable = true;
  for (const auto& x : *x0) out.particular.push_back(to_int64(x));

  // The indecomposable-level map must have kernel Z * (1,2,...,2,1).
  std::vector<IntVector> vertex_deltas;
  for (std::size_t c = 0; c < q.class_count(); ++c) vertex_deltas.push_back(orbifold_contribution(q.vertices[c]).entries);
  const std::vector<std::int64_t> v = q.cycle_vector();
  auto kernel = int_kernel(IntMatrix::from_columns(static_cast<std::size_t>(ell - 2), vertex_deltas));
  bool kernel_ok = kernel.size() == 1;
  for (std::size_t c = 0; kernel_ok && c < v.size(); ++c) {
    kernel_ok = kernel[0][c] == v[c] * kernel[0][0];
  }
  if (!kernel_ok) throw Error(ErrorCode::ConjectureViolation, "indecomposable kernel is not spanned by the cycle");

  IndecMultiset base = IndecMultiset::zero(ell);
  for (std::size_t i = 0; i < out.particular.size(); ++i) {
    const std::int64_t x = out.particular[i];
    if (x == 0) continue;
    const Singularity& s = x > 0 ? rp.members[i] : rp.inverses[i];
    const IndecMultiset& rho = classes[class_index(classes, s)].rho;
    for (std::size_t c = 0; c < v.size(); ++c) base.counts[c] += (x > 0 ? x : -x) * rho.counts[c];
  }
  std::int64_t shift = base.counts[0] / v[0];
  for (std::size_t c = 0; c < v.size(); ++c) shift = std::min(shift, base.counts[c] / v[c]);
  for (std::size_t c = 0; c < v.size(); ++c) base.counts[c] -= shift * v[c];
  out.base = base;
  out.mu_max = (1 + base.total()) * (ell + 1);
  if (opts.max_mu >= 0 && opts.max_mu < out.mu_max) {
    throw Error(ErrorCode::CapacityExceeded, "search needs mu up to " + std::to_string(out.mu_max) + " but the ceiling is " +
                                                 std::to_string(opts.max_mu));
  }

  std::vector<std::vector<std::vector<std::int64_t>>> per_mu(static_cast<std::size_t>(out.mu_max + 1));
  std::atomic<std::int64_t> next_mu{0};
  std::atomic<std::uint64_t> nodes{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    Sweep sweep(ell, opts, nodes);
    for (;;) {
      const std::int64_t mu = next_mu++;
      if (mu > out.mu_max) return;
      try {
        std::vector<std::int64_t> target = base.counts;
        for (std::size_t c = 0; c < v.size(); ++c) target[c] += mu * v[c];
        per_mu[static_cast<std::size_t>(mu)] = sweep.run(target);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next_mu = out.mu_max + 1;
        return;
      }
    }
  };
  const unsigned jobs = std::max(1u, opts.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  std::set<Basket> baskets;
  for (const auto& found : per_mu) {
    for (const auto& counts : found) baskets.insert(basket_from_counts(classes, counts));
  }
  for (const auto& b : baskets) {
    Rational rk = 0;
    for (const auto& s : b) rk += classes[class_index(classes, s)].degree;
    out.baskets.push_back(b);
    out.coordinates.push_back(signed_coordinates(rp, b));
    out.rk_squared.push_back(rk);
  }
  return out;
}

bool features_in(const std::vector<std::int64_t>& u, const std::vector<std::int64_t>& v) {
  if (u.size() != v.size()) throw Error(ErrorCode::LengthMismatch, "vectors must have equal length");
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (v[i] > 0 && u[i] < v[i]) return false;
    if (v[i] < 0 && u[i] > v[i]) return false;
  }
  return true;
}

std::string verdict_name(Verdict v) { return v == Verdict::Feasible ? "FEASIBLE" : "NO_SURFACE"; }

FeasibilityReport analyze_series(const RationalFunction& h, const EnumerateOptions& opts) {
  SeriesSplit split = split_series(h);
  FeasibilityReport report;
  report.k2 = split.k2;
  report.parts = split.parts;
  std::vector<const ReducedBody*> bodies;
  std::size_t product = 1;
  for (const auto& [ell, delta] : split.parts) {
    auto it = report.bodies.emplace(ell, enumerate_reduced_baskets(ell, delta, opts)).first;
    bodies.push_back(&it->second);
    product *= it->second.baskets.size();
    if (product > kMaxChoices) throw Error(ErrorCode::CapacityExceeded, "too many reduced-basket combinations");
  }
  std::vector<std::size_t> pick(bodies.size(), 0);
  if (product > 0) {
    for (;;) {
      Choice choice;
      choice.rk_squared = 0;
      for (std::size_t i = 0; i < bodies.size(); ++i) {
        const Basket& b = bodies[i]->baskets[pick[i]];
        choice.basket.insert(choice.basket.end(), b.begin(), b.end());
        choice.rk_squared += bodies[i]->rk_squared[pick[i]];
      }
      choice.ik_squared = Rational(12) - report.k2 - choice.rk_squared;
      choice.feasible = is_integral(choice.ik_squared) && choice.ik_squared >= 0;
      report.choices.push_back(std::move(choice));
      std::size_t i = 0;
      while (i < pick.size() && ++pick[i] == bodies[i]->baskets.size()) pick[i++] = 0;
      if (i == pick.size()) break;
    }
  }
  bool any = false, room = false;
  for (const auto& c : report.choices) {
    if (!c.feasible) continue;
    any = true;
    if (c.ik_squared > 0) room = true;
  }
  report.verdict = any ? Verdict::Feasible : Verdict::NoSurface;
  report.forced_empty = any && !room;
  report.toric_impossible = !room;
  return report;
}

DegreeBounds degree_bounds(const Basket& basket, const DegreeBoundsConfig& cfg) {
  if (cfg.n_min < 0) throw Error(ErrorCode::Infeasible, "nMin must be nonnegative");
  const Rational a = basket_contributions(basket).total_a;
  const Rational top = Rational(12) - a - cfg.n_min;
  if (top <= 0) throw Error(ErrorCode::Infeasible, "12 - A - nMin = " + to_string(top) + " leaves no positive degree");
  Rational low = frac(top);
  if (low == 0) low = 1;
  return {low, top};
}

CountBound count_bound_detail(const DeltaParts& q, std::int64_t ell_star, const EnumerateOptions& opts) {
  if (ell_star < 1) throw Error(ErrorCode::InvalidSingularity, "l* must be positive");
  CountBound out;
  out.min_rk_squared = 0;
  for (const auto& [ell, delta] : q) {
    ReducedBody body = enumerate_reduced_baskets(ell, delta, opts);
    if (!body.realizable || body.baskets.empty()) {
      throw Error(ErrorCode::NotRealizable, to_string(delta) + " is not realizable at local index " + std::to_string(ell));
    }
    std::size_t size = 0;
    for (const auto& b : body.baskets) size = std::max(size, b.size());
    out.max_size += static_cast<std::int64_t>(size);
    out.min_rk_squared += *std::min_element(body.rk_squared.begin(), body.rk_squared.end());
  }
  const Rational b = Rational(12) - out.min_rk_squared;
  if (b <= 0) throw Error(ErrorCode::Infeasible, "no degree budget: 12 - RK^2 = " + to_string(b));
  out.budget = is_integral(b) ? Integer(numerator(b) - 1) : floor(b);
  out.bound = Integer(out.max_size) + out.budget * (ell_star + 1);
  return out;
}

Integer count_bound(const DeltaParts& q, std::int64_t ell_star, const EnumerateOptions& opts) {
  return count_bound_detail(q, ell_star, opts).bound;
}

PsiInvariants psi_invariants(const Basket& extended, std::int64_t ell) {
  Basket piece, residues;
  for (const auto& s : extended) {
    if (s.is_smooth() || s.local_index() != ell) continue;
    piece.push_back(s);
    Singularity r = residue(s).residue;
    if (!r.is_smooth()) residues.push_back(r);
  }
  return {maximal_shattering(residues, ell), maximal_shattering(piece, ell)};
}

}  // namespace hilbasket
