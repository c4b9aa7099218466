#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "hilbasket/basket.hpp"
#include "hilbasket/error.hpp"
#include "hilbasket/hilbert.hpp"
#include "hilbasket/quiver.hpp"
#include "hilbasket/reconstruct.hpp"
#include "oracles.hpp"

using namespace hilbasket;
using Coords = std::vector<std::int64_t>;

namespace {

struct Check {
  std::string detail;
  bool ok = true;
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

DeltaVector dv(std::int64_t ell, const Coords& e) {
  DeltaVector d;
  d.ell = ell;
  for (auto x : e) d.entries.emplace_back(x);
  return d;
}

Coords ints(const std::vector<Integer>& v) {
  Coords out;
  for (const auto& x : v) out.push_back(to_int64(x));
  return out;
}

std::vector<Coords> q_plus(std::int64_t ell) {
  std::vector<Coords> out;
  for (const auto& m : res_plus(ell).members) out.push_back(ints(orbifold_contribution(m).entries));
  return out;
}

std::vector<Singularity> residuals(std::int64_t ell) {
  std::vector<Singularity> out;
  for (std::int64_t k = 1; k < ell; ++k) {
    const std::int64_t r = k * ell;
    for (std::int64_t a = 1; a < r; ++a) {
      if (gcd64(r, a) == 1 && gcd64(r, a + 1) == k) out.push_back({r, a});
    }
  }
  return out;
}

std::optional<Singularity> pick(std::mt19937_64& rng, std::int64_t ell, std::int64_t k) {
  const std::int64_t r = k * ell;
  if (r == 1) return std::nullopt;
  std::vector<Singularity> options;
  for (std::int64_t c = 0; c < ell; ++c) {
    if (gcd64(c, ell) != 1) continue;
    const std::int64_t a = mod64(k * c - 1, r);
    if (a != 0 && gcd64(r, a) == 1) options.push_back({r, a});
  }
  if (options.empty()) return std::nullopt;
  return options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
}

Check ac1() {
  Check c;
  c.expect(orbifold_contribution({5, 1}) == dv(5, {1, -2, 1}), "1/5(1,1)");
  const std::vector<Coords> want{{1, -2, 1}, {2, 1, 2}, {3, 4, 3}, {1, 3, 1}};
  c.expect(q_plus(5) == want, "Res+(5) delta-vectors");
  return c;
}

Check ac2() {
  Check c;
  const auto q = q_plus(5);
  for (std::size_t d = 0; d < 3; ++d) {
    c.expect(q[0][d] + q[3][d] == q[1][d], "q1+q4=q2");
    c.expect(q[0][d] + 2 * q[3][d] == q[2][d], "q1+2q4=q3");
  }
  c.expect(delta_lattice(5).rank == 2, "rank 2");
  return c;
}

Check ac3() {
  Check c;
  for (std::int64_t ell = 3; ell <= 34; ++ell) {
    const auto rank = static_cast<std::int64_t>(delta_lattice(ell).rank);
    c.expect(rank == euler_phi(ell) / 2, "l=" + std::to_string(ell) + " rank " + std::to_string(rank));
  }
  return c;
}

Check ac4() {
  Check c;
  const ResidualQuiver& q = residual_quiver(5);
  c.expect(q.vertices == std::vector<Singularity>{{5, 1}, {5, 2}, {10, 1}, {5, 3}}, "l=5 cycle");
  std::int64_t w = 0;
  for (const auto& v : q.vertices) w += v.width();
  c.expect(w == 5, "widths sum");
  for (std::int64_t ell = 3; ell <= 20; ++ell) {
    c.expect(static_cast<std::int64_t>(residual_quiver(ell).size()) == euler_phi(ell), "|Q(" + std::to_string(ell) + ")|");
  }
  return c;
}

Check ac5() {
  Check c;
  const ResPlus& rp = res_plus(5);
  std::set<std::set<std::pair<std::int64_t, std::int64_t>>> got, want;
  for (std::size_t i = 0; i < rp.members.size(); ++i) got.insert({iso_key(rp.members[i]), iso_key(rp.inverses[i])});
  for (auto [x, y] : std::vector<std::pair<Singularity, Singularity>>{
           {{5, 1}, {20, 11}}, {{20, 3}, {5, 2}}, {{10, 1}, {15, 11}}, {{10, 3}, {15, 2}}}) {
    want.insert({iso_key(x), iso_key(y)});
  }
  c.expect(got == want, "pairs");
  return c;
}

Check ac6() {
  Check c;
  c.expect(hyperplane_sum(Singularity{6, 1}, Singularity{3, 1}) == Singularity{9, 2}, "1/6(1,1)*1/3(1,1)");
  c.expect(maximal_shards({9, 2}) == std::vector<Singularity>{{6, 1}, {3, 1}}, "maximal shattering");
  c.expect(shattering_points({9, 2}) == Coords{2}, "midpoint excluded");
  c.expect(oracle::primitive_edge_points({9, 2}) == Coords{2}, "oracle midpoint");
  return c;
}

Check ac7() {
  Check c;
  const ReducedBody b = enumerate_reduced_baskets(5, dv(5, {2, 1, 2}));
  const std::set<Coords> got(b.coordinates.begin(), b.coordinates.end());
  c.expect(got == std::set<Coords>{{1, 0, 0, 1}, {1, -1, 1, 0}, {0, 0, 1, -1}, {0, 1, 0, 0}}, "(2,1,2) coordinates");
  for (const auto& rk : b.rk_squared) c.expect(rk == Rational(-8, 5), "RK^2 " + to_string(rk));
  const ReducedBody big = enumerate_reduced_baskets(5, dv(5, {8, -1, 8}));
  c.expect(big.baskets.size() == 18, "(8,-1,8) gives " + std::to_string(big.baskets.size()) + " baskets, expected 18");
  return c;
}

Check ac8() {
  Check c;
  for (int m = 11; m <= 15; ++m) {
    const auto r = analyze_series(parse_rational_function("(1+" + std::to_string(m) + "*t+t^2)/(1-t)^3"));
    c.expect(r.verdict == Verdict::NoSurface, "m=" + std::to_string(m));
  }
  const auto r10 = analyze_series(parse_rational_function("(1+10*t+t^2)/(1-t)^3"));
  c.expect(r10.verdict == Verdict::Feasible && r10.forced_empty && r10.toric_impossible, "m=10");
  const auto r7 = analyze_series(parse_rational_function("(1+7*t+t^2)/(1-t)^3"));
  c.expect(r7.verdict == Verdict::Feasible && r7.choices.size() == 1 && r7.choices[0].ik_squared == 3, "m=7");
  return c;
}

Check ac9() {
  Check c;
  const DeltaParts q{{5, dv(5, {2, 1, 2})}};
  const Integer n5 = count_bound(q, 5);
  c.expect(n5 == 82, "l*=5 gives " + to_string(n5) + ", expected 82");
  for (std::int64_t l : {1, 2, 3, 5}) {
    const Integer n = count_bound(q, 5 * l);
    c.expect(n == 65 * l + 17, "l*=" + std::to_string(5 * l) + " gives " + to_string(n) + ", expected " +
                                   std::to_string(65 * l + 17));
  }
  return c;
}

Check ac10() {
  Check c;
  for (std::int64_t d = 1; d <= 4; ++d) {
    for (std::int64_t n = 2; n <= 5; ++n) {
      for (std::int64_t cc = 1; cc < n; ++cc) {
        if (gcd64(n, cc) != 1) continue;
        const Singularity t{d * n * n, d * n * cc - 1};
        c.expect(orbifold_contribution(t).is_zero(), "Q " + to_string(t));
        c.expect(degree_contribution(t) == d, "A " + to_string(t));
      }
    }
  }
  for (std::int64_t r = 2; r <= 200; ++r) {
    for (std::int64_t a = 1; a < r; ++a) {
      if (gcd64(r, a) != 1) continue;
      const Singularity s{r, a};
      if (!is_residual(s)) continue;
      c.expect(!orbifold_contribution(s).is_zero(), "residual " + to_string(s));
    }
  }
  return c;
}

Check ac11() {
  Check c;
  std::mt19937_64 rng(20240601);
  int done = 0;
  while (done < 200) {
    const std::int64_t ell = std::uniform_int_distribution<std::int64_t>(1, 8)(rng);
    const auto s = pick(rng, ell, std::uniform_int_distribution<std::int64_t>(1, 12)(rng));
    if (!s) continue;
    ++done;
    const Rational a = degree_contribution(*s);
    for (const auto& pieces : shatterings(*s)) {
      Rational sa = 0;
      DeltaVector sq = DeltaVector::zero(ell);
      for (const auto& p : pieces) {
        sa += degree_contribution(p);
        if (ell >= 3) sq += orbifold_contribution(p);
      }
      c.expect(sa == a, "A additivity " + to_string(*s));
      if (ell >= 3) c.expect(sq == orbifold_contribution(*s), "Q additivity " + to_string(*s));
    }
  }
  for (std::int64_t ell = 3; ell <= 12; ++ell) {
    for (const auto& s : residuals(ell)) {
      c.expect(degree_contribution(s) + degree_contribution(hyperplane_inverse(s)) == 1, "A+A^-1 " + to_string(s));
    }
  }
  for (std::int64_t ell = 3; ell <= 20; ++ell) {
    for (const auto& s : residuals(ell)) c.expect(orbifold_contribution(s).is_palindromic(), "palindrome " + to_string(s));
  }
  for (std::int64_t r = 2; r <= 60; ++r) {
    for (std::int64_t a = 1; a < r; ++a) {
      if (gcd64(r, a) != 1) continue;
      for (std::int64_t i = 0; i < r; i += 1 + r / 10) {
        const double gap = std::abs(dedekind_sum(r, a, i).convert_to<double>() - oracle::dedekind_numeric(r, a, i));
        c.expect(gap <= 1e-9, "dedekind " + std::to_string(r) + "," + std::to_string(a));
      }
    }
  }
  for (int trial = 0; trial < 100; ++trial) {
    const std::int64_t n = std::uniform_int_distribution<std::int64_t>(2, 7)(rng);
    const std::int64_t d = std::uniform_int_distribution<std::int64_t>(1, 3)(rng);
    const auto t = pick(rng, n, d * n);
    if (!t) continue;
    const auto all = shatterings(*t);
    const auto& pieces = all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
    Rational sa = 0;
    for (const auto& p : pieces) sa += degree_contribution(p);
    c.expect(is_integral(sa) && sa >= 0, "cancelling A " + to_string(*t));
  }
  return c;
}

Check ac12() {
  Check c;
  for (std::int64_t ell = 3; ell <= 34; ++ell) {
    Singularity x, y;
    if (ell % 2) {
      x = {ell, 1};
      y = {2 * ell, 1};
    } else if (ell % 8 == 0 || ell % 8 == 4) {
      x = {2 * ell, 1};
      y = {2 * ell, ell + 1};
    } else if (ell % 8 == 2) {
      x = {2 * ell, 1};
      y = {4 * ell, ell + 1};
    } else {
      x = {2 * ell, 1};
      y = {4 * ell, 3 * ell + 1};
    }
    const auto [a, b] = self_duals(ell);
    const bool match = (isomorphic(a, x) && isomorphic(b, y)) || (isomorphic(a, y) && isomorphic(b, x));
    c.expect(match && dual(a) == a && dual(b) == b, "l=" + std::to_string(ell));
  }
  return c;
}

Check ac13() {
  Check c;
  for (const Coords& d : std::vector<Coords>{{2, 1, 2}, {1, -2, 1}, {1, 3, 1}}) {
    const ReducedBody b = enumerate_reduced_baskets(5, dv(5, d));
    const auto box = oracle::box_reduced(q_plus(5), d, 8);
    c.expect(std::set<Coords>(b.coordinates.begin(), b.coordinates.end()) == std::set<Coords>(box.begin(), box.end()),
             "delta " + to_string(dv(5, d)));
  }
  return c;
}

Check ac14() {
  Check c;
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 100; ++trial) {
    Basket b;
    const int size = std::uniform_int_distribution<int>(0, 5)(rng);
    for (int i = 0; i < size; ++i) {
      const std::int64_t ell = std::uniform_int_distribution<std::int64_t>(1, 10)(rng);
      const auto s = pick(rng, ell, std::uniform_int_distribution<std::int64_t>(1, 2 * ell)(rng));
      if (s) b.push_back(*s);
    }
    const Rational k2(std::uniform_int_distribution<int>(1, 90)(rng), std::uniform_int_distribution<int>(1, 10)(rng));
    try {
      const SeriesSplit split = split_series(assemble_series(b, k2).series);
      c.expect(split.k2 == k2 && split.parts == nonzero_parts(basket_contributions(b).parts), "round trip " + to_string(b));
    } catch (const Error& e) {
      c.expect(false, to_string(b) + ": " + e.what());
    }
  }
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria{
      {"AC1 delta-vectors", ac1},
      {"AC2 relations and rank at l=5", ac2},
      {"AC3 rank sweep 3..34", ac3},
      {"AC4 residual quiver", ac4},
      {"AC5 inverse pairs at l=5", ac5},
      {"AC6 hyperplane sum and shattering", ac6},
      {"AC7 reduced baskets", ac7},
      {"AC8 nonexistence verdicts", ac8},
      {"AC9 singularity count bound", ac9},
      {"AC10 T-singularity laws", ac10},
      {"AC11 property suites", ac11},
      {"AC12 self-dual table", ac12},
      {"AC13 box oracle equivalence", ac13},
      {"AC14 series round trip", ac14},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Check c;
    try {
      c = fn();
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line << (c.ok ? "PASS " : "FAIL ") << name << " (" << std::fixed;
    line.precision(2);
    line << secs << "s)";
    if (!c.ok) line << ": " << (c.detail.size() > 400 ? c.detail.substr(0, 400) + "..." : c.detail);
    std::cout << line.str() << std::endl;
    if (!c.ok) ++failed;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed ? 1 : 0;
}
