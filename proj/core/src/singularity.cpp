#include "hilbasket/singularity.hpp"

#include <regex>

#include "hilbasket/error.hpp"
#include "hilbasket/numbers.hpp"

namespace hilbasket {

namespace {

// (a+1)/k without reduction; equals the slope whenever l > 1.
std::int64_t raw_slope(const Singularity& s) { return (s.a + 1) / s.width(); }

bool primitive(const Vec2& v) { return gcd64(v.x, v.y) == 1; }

struct Bezout64 {
  std::int64_t g, x, y;
};

Bezout64 ext_gcd64(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b, old_x = 1, x = 0, old_y = 0, y = 1;
  while (r != 0) {
    std::int64_t q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_x = std::exchange(x, old_x - q * x);
    old_y = std::exchange(y, old_y - q * y);
  }
  if (old_r < 0) return {-old_r, -old_x, -old_y};
  return {old_r, old_x, old_y};
}

}  // namespace

std::int64_t Singularity::width() const { return gcd64(r, a + 1); }
std::int64_t Singularity::local_index() const { return r / width(); }
std::int64_t Singularity::slope() const { return mod64((a + 1) / width(), local_index()); }

Singularity make_singularity(std::int64_t r, std::int64_t a) {
  if (r == 1 && a == 0) return Singularity::smooth();
  if (r < 2 || a < 1 || a >= r) {
    throw Error(ErrorCode::InvalidSingularity, "1/" + std::to_string(r) + "(1," + std::to_string(a) + ") needs 1 <= a < r");
  }
  if (gcd64(r, a) != 1) {
    throw Error(ErrorCode::InvalidSingularity,
                "1/" + std::to_string(r) + "(1," + std::to_string(a) + ") is not isolated: gcd(r,a) = " +
                    std::to_string(gcd64(r, a)));
  }
  return {r, a};
}

Singularity parse_singularity(const std::string& text) {
  static const std::regex form(R"(^\s*1\s*/\s*(\d{1,15})\s*\(\s*1\s*,\s*(\d{1,15})\s*\)\s*$)");
  static const std::regex smooth_form(R"(^\s*smooth\s*$)");
  std::smatch m;
  if (std::regex_match(text, smooth_form)) return Singularity::smooth();
  if (!std::regex_match(text, m, form)) throw Error(ErrorCode::ParseError, "expected 1/r(1,a), got '" + text + "'");
  return make_singularity(std::stoll(m[1].str()), std::stoll(m[2].str()));
}

std::string to_string(const Singularity& s) {
  if (s.is_smooth()) return "smooth";
  return "1/" + std::to_string(s.r) + "(1," + std::to_string(s.a) + ")";
}

Singularity normalize_cone(const IntCone& cone) {
  const auto [p, q] = cone.u;
  const std::int64_t r = q * cone.v.x - p * cone.v.y;
  if (r == 0) throw Error(ErrorCode::DegenerateCone, "rays are parallel");
  if (r < 0) throw Error(ErrorCode::DegenerateCone, "rays are not in clockwise order");
  if (!primitive(cone.u) || !primitive(cone.v)) throw Error(ErrorCode::DegenerateCone, "rays must be primitive");
  // [[q, -p], [g, d]] with g*p + d*q = 1 sends u to e2 and v to (r, g*v.x + d*v.y).
  Bezout64 b = ext_gcd64(p, q);
  const std::int64_t y = b.x * cone.v.x + b.y * cone.v.y;
  if (r == 1) return Singularity::smooth();
  return {r, mod64(-y, r)};
}

Invariants invariants(const Singularity& s) { return {s.local_index(), s.width(), s.slope()}; }

Classification classify(const Singularity& s) {
  if (s.is_smooth()) return {Kind::Smooth, std::nullopt};
  const auto [ell, k, c] = invariants(s);
  if (k % ell == 0) return {Kind::TSingularity, TData{k / ell, ell, raw_slope(s)}};
  if (k > ell) return {Kind::Composite, std::nullopt};
  if (shattering_points(s).empty()) return {Kind::ResidualIndecomposable, std::nullopt};
  return {Kind::Residual, std::nullopt};
}

bool is_residual(const Singularity& s) { return !s.is_smooth() && s.width() < s.local_index(); }

Residue residue(const Singularity& s) {
  if (s.is_smooth()) return {s, {}};
  const std::int64_t ell = s.local_index(), k = s.width(), c = raw_slope(s);
  const std::int64_t k0 = k % ell, d = k / ell;
  Residue out{Singularity::smooth(), {}};
  if (k0 > 0) out.residue = {k0 * ell, k0 * c - 1};
  if (d > 0) out.t_parts.push_back(TData{d, ell, ell == 1 ? 1 : c});
  return out;
}

Singularity dual(const Singularity& s) {
  if (s.is_smooth()) return s;
  return {s.r, inverse_mod64(s.a, s.r)};
}

bool isomorphic(const Singularity& s, const Singularity& t) { return s.r == t.r && (s.a == t.a || s.a == dual(t).a); }

Singularity canonical(const Singularity& s) {
  if (s.is_smooth()) return s;
  return {s.r, std::min(s.a, dual(s).a)};
}

std::pair<std::int64_t, std::int64_t> iso_key(const Singularity& s) {
  Singularity c = canonical(s);
  return {c.r, c.a};
}

Singularity hyperplane_inverse(const Singularity& s) {
  if (!is_residual(s)) throw Error(ErrorCode::NotResidual, to_string(s) + " is not residual");
  const std::int64_t n = s.local_index(), k = s.width(), c = raw_slope(s);
  return {n * (n - k), (n - k) * (n - c) - 1};
}

Vec2 edge_point(const Singularity& s, std::int64_t j) {
  return {j * s.local_index(), 1 - j * raw_slope(s)};
}

std::optional<Singularity> hyperplane_sum(const Singularity& s1, const Singularity& s2) {
  if (s1.local_index() != s2.local_index()) return std::nullopt;
  const std::int64_t k1 = s1.width(), k2 = s2.width();
  const Vec2 mid = edge_point(s1, k1), end = edge_point(s1, k1 + k2);
  if (!primitive(end)) return std::nullopt;
  if (normalize_cone({mid, end}) != s2) return std::nullopt;
  return normalize_cone({Vec2{0, 1}, end});
}

std::optional<Singularity> hyperplane_sum(const std::vector<Singularity>& chain) {
  if (chain.empty()) return std::nullopt;
  std::optional<Singularity> acc = chain.front();
  for (std::size_t i = 1; i < chain.size() && acc; ++i) acc = hyperplane_sum(*acc, chain[i]);
  return acc;
}

std::vector<std::int64_t> shattering_points(const Singularity& s) {
  std::vector<std::int64_t> out;
  const std::int64_t ell = s.local_index(), c = raw_slope(s);
  for (std::int64_t j = 1; j < s.width(); ++j) {
    if (gcd64(ell, j * c - 1) == 1) out.push_back(j);
  }
  return out;
}

std::vector<Singularity> shards(const Singularity& s, const std::vector<std::int64_t>& cuts) {
  std::vector<Singularity> out;
  std::int64_t prev = 0;
  auto push = [&](std::int64_t j) {
    if (j <= prev || j > s.width()) throw Error(ErrorCode::InvalidSingularity, "cuts must increase inside the edge");
    out.push_back(normalize_cone({edge_point(s, prev), edge_point(s, j)}));
    prev = j;
  };
  for (std::int64_t j : cuts) push(j);
  push(s.width());
  return out;
}

std::vector<std::vector<Singularity>> shatterings(const Singularity& s) {
  const std::vector<std::int64_t> points = shattering_points(s);
  if (points.size() > 20) {
    throw Error(ErrorCode::CapacityExceeded, to_string(s) + " has " + std::to_string(points.size()) + " shattering points");
  }
  std::vector<std::vector<Singularity>> out;
  for (std::uint32_t mask = 0; mask < (1u << points.size()); ++mask) {
    std::vector<std::int64_t> cuts;
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (mask & (1u << i)) cuts.push_back(points[i]);
    }
    out.push_back(shards(s, cuts));
  }
  return out;
}

std::vector<Singularity> maximal_shards(const Singularity& s) {
  if (s.is_smooth()) return {};
  return shards(s, shattering_points(s));
}

std::optional<Singularity> gluing_cone(const Singularity& s1, const Singularity& s2) {
  const std::int64_t ell = s1.local_index();
  if (ell != s2.local_index()) {
    throw Error(ErrorCode::LocalIndexMismatch, to_string(s1) + " and " + to_string(s2) + " have different local index");
  }
  if (hyperplane_sum(s1, s2)) return std::nullopt;
  const std::int64_t k1 = s1.width();
  const Vec2 start = edge_point(s1, k1);
  for (std::int64_t w = 1; w <= 4 * ell + s2.width(); ++w) {
    const Vec2 end = edge_point(s1, k1 + w);
    if (!primitive(end)) continue;
    Singularity g = normalize_cone({start, end});
    if (hyperplane_sum(s1, g) && hyperplane_sum(g, s2)) return g;
  }
  throw Error(ErrorCode::ConjectureViolation, "no gluing cone between " + to_string(s1) + " and " + to_string(s2));
}

}  // namespace hilbasket
