#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

#include "hilbasket/basket.hpp"
#include "hilbasket/error.hpp"
#include "hilbasket/hilbert.hpp"
#include "hilbasket/quiver.hpp"
#include "hilbasket/reconstruct.hpp"
#include "hilbasket/singularity.hpp"

namespace hilbasket::cli {

namespace {

using nlohmann::ordered_json;

struct Flags {
  bool json = false;
  bool full_delta = false;
  std::size_t terms = 0;
  unsigned jobs = 1;
  std::int64_t max_mu = -1;
  std::int64_t nmin = 0;
};

struct Inputs {
  std::string singularity;
  std::string basket;
  std::string k2 = "";
  std::string series;
  std::string delta;
  std::vector<std::string> parts;
  std::int64_t ell = 0;
  std::int64_t ell_star = 0;
  std::int64_t max_ell = 34;
};

ordered_json delta_json(const DeltaVector& d, bool full) {
  ordered_json j = ordered_json::array();
  for (const auto& e : full ? d.full() : d.entries) j.push_back(to_int64(e));
  return j;
}

ordered_json basket_json(const Basket& b) {
  ordered_json j = ordered_json::array();
  for (const auto& s : b) j.push_back(to_string(s));
  return j;
}

ordered_json terms_json(const RationalFunction& f, std::size_t n) {
  ordered_json j = ordered_json::array();
  for (const auto& c : f.series(n)) j.push_back(to_string(c));
  return j;
}

std::string join_terms(const RationalFunction& f, std::size_t n) {
  std::string s;
  for (const auto& c : f.series(n)) s += (s.empty() ? "" : ", ") + to_string(c);
  return s;
}

EnumerateOptions enumerate_options(const Flags& f) {
  EnumerateOptions o;
  o.jobs = f.jobs;
  o.max_mu = f.max_mu;
  return o;
}

ordered_json body_json(const ReducedBody& body, const Flags& f) {
  ordered_json j;
  j["localIndex"] = body.ell;
  j["delta"] = delta_json(body.delta, f.full_delta);
  j["baskets"] = ordered_json::array();
  j["rkSquared"] = ordered_json::array();
  for (std::size_t i = 0; i < body.baskets.size(); ++i) {
    j["baskets"].push_back(basket_json(body.baskets[i]));
    j["rkSquared"].push_back(to_string(body.rk_squared[i]));
  }
  return j;
}

void print_body(std::ostream& out, const ReducedBody& body, const Flags& f) {
  out << "localIndex: " << body.ell << "\n";
  out << "delta: " << to_string(body.delta, f.full_delta) << "\n";
  if (!body.realizable) {
    out << "realizable: no\n";
    return;
  }
  out << "baskets: " << body.baskets.size() << "\n";
  for (std::size_t i = 0; i < body.baskets.size(); ++i) {
    out << "  [";
    for (std::size_t c = 0; c < body.coordinates[i].size(); ++c) out << (c ? "," : "") << body.coordinates[i][c];
    out << "] " << to_string(body.baskets[i]) << " RK^2=" << to_string(body.rk_squared[i]) << "\n";
  }
}

DeltaParts parse_parts(const std::vector<std::string>& items) {
  DeltaParts parts;
  for (const auto& item : items) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw Error(ErrorCode::ParseError, "expected l:(d1,...) but got '" + item + "'");
    std::int64_t ell = 0;
    try {
      ell = std::stoll(item.substr(0, colon));
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "bad local index in '" + item + "'");
    }
    parts[ell] = parse_delta(ell, item.substr(colon + 1));
  }
  return parts;
}

int cmd_contrib(const Inputs& in, const Flags& f, std::ostream& out) {
  const Singularity s = parse_singularity(in.singularity);
  const DeltaVector d = orbifold_contribution(s);
  const Rational a = degree_contribution(s);
  if (f.json) {
    ordered_json j;
    j["singularity"] = to_string(s);
    j["localIndex"] = s.local_index();
    j["delta"] = delta_json(d, f.full_delta);
    j["Q"] = render_contribution(d);
    j["A"] = to_string(a);
    if (f.terms) j["terms"] = terms_json(contribution_series(d), f.terms);
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << "singularity: " << to_string(s) << "\n";
  out << "localIndex: " << s.local_index() << "\n";
  out << "delta: " << to_string(d, f.full_delta) << "\n";
  out << "Q: " << render_contribution(d) << "\n";
  out << "A: " << to_string(a) << "\n";
  if (f.terms) out << "terms: " << join_terms(contribution_series(d), f.terms) << "\n";
  return kExitOk;
}

int cmd_series(const Inputs& in, const Flags& f, std::ostream& out) {
  const Basket b = parse_basket(in.basket);
  const HilbertSeries h = assemble_series(b, parse_rational(in.k2));
  if (f.json) {
    ordered_json j;
    j["basket"] = basket_json(sorted_basket(b));
    j["k2"] = to_string(h.k2);
    j["series"] = h.series.to_string();
    j["parts"] = ordered_json::array();
    for (const auto& [ell, d] : h.parts) j["parts"].push_back({{"localIndex", ell}, {"delta", delta_json(d, f.full_delta)}});
    if (f.terms) j["terms"] = terms_json(h.series, f.terms);
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << "K^2: " << to_string(h.k2) << "\n";
  for (const auto& [ell, d] : h.parts) out << "delta[" << ell << "]: " << to_string(d, f.full_delta) << "\n";
  out << "H: " << h.series.to_string() << "\n";
  if (f.terms) out << "terms: " << join_terms(h.series, f.terms) << "\n";
  return kExitOk;
}

std::string kind_name(Kind k) {
  switch (k) {
    case Kind::Smooth: return "smooth";
    case Kind::TSingularity: return "T";
    case Kind::Residual: return "residual";
    case Kind::ResidualIndecomposable: return "indecomposable";
    case Kind::Composite: return "composite";
  }
  return "?";
}

int cmd_residue(const Inputs& in, const Flags& f, std::ostream& out) {
  const Singularity s = parse_singularity(in.singularity);
  const Invariants inv = invariants(s);
  const Classification cls = classify(s);
  const Residue res = residue(s);
  std::string tparts;
  for (const auto& t : res.t_parts) {
    tparts += (tparts.empty() ? "" : ", ") + to_string(t.singularity()) + " [d=" + std::to_string(t.d) +
              " n=" + std::to_string(t.n) + " c=" + std::to_string(t.c) + "]";
  }
  const bool residual = is_residual(s);
  if (f.json) {
    ordered_json j;
    j["singularity"] = to_string(s);
    j["localIndex"] = inv.ell;
    j["width"] = inv.k;
    j["slope"] = inv.c;
    j["kind"] = kind_name(cls.kind);
    j["residue"] = to_string(res.residue);
    j["tParts"] = ordered_json::array();
    for (const auto& t : res.t_parts) j["tParts"].push_back(to_string(t.singularity()));
    j["dual"] = to_string(dual(s));
    if (residual) j["inverse"] = to_string(hyperplane_inverse(s));
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << "singularity: " << to_string(s) << "\n";
  out << "localIndex: " << inv.ell << " width: " << inv.k << " slope: " << inv.c << "\n";
  out << "kind: " << kind_name(cls.kind) << "\n";
  out << "residue: " << to_string(res.residue) << "\n";
  out << "tParts: " << (tparts.empty() ? "none" : tparts) << "\n";
  out << "dual: " << to_string(dual(s)) << "\n";
  if (residual) out << "inverse: " << to_string(hyperplane_inverse(s)) << "\n";
  return kExitOk;
}

int cmd_quiver(const Inputs& in, const Flags& f, std::ostream& out) {
  const ResidualQuiver& q = residual_quiver(in.ell);
  const auto [sd1, sd2] = self_duals(in.ell);
  if (f.json) {
    ordered_json j;
    j["localIndex"] = q.ell;
    j["vertices"] = ordered_json::array();
    for (const auto& v : q.vertices) {
      j["vertices"].push_back({{"singularity", to_string(v)},
                               {"width", v.width()},
                               {"delta", delta_json(orbifold_contribution(v), f.full_delta)}});
    }
    j["selfDuals"] = {to_string(sd1), to_string(sd2)};
    j["cycleVector"] = q.cycle_vector();
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << "localIndex: " << q.ell << "\n";
  out << "cycle:";
  for (const auto& v : q.vertices) out << " " << to_string(v) << " ->";
  out << " " << to_string(q.vertices.front()) << "\n";
  for (std::size_t i = 0; i < q.size(); ++i) {
    out << "  " << i << " " << to_string(q.vertices[i]) << " width=" << q.vertices[i].width()
        << " delta=" << to_string(orbifold_contribution(q.vertices[i]), f.full_delta) << "\n";
  }
  out << "selfDuals: " << to_string(sd1) << ", " << to_string(sd2) << "\n";
  return kExitOk;
}

int cmd_delta_rank(const Inputs& in, const Flags& f, std::ostream& out) {
  if (in.ell <= 2) throw Error(ErrorCode::UnsupportedIndex, "delta lattice needs l >= 3");
  const DeltaLattice lat = delta_lattice(in.ell);
  const std::int64_t half = euler_phi(in.ell) / 2;
  const bool ok = static_cast<std::int64_t>(lat.rank) == half;
  if (f.json) {
    ordered_json j;
    j["localIndex"] = in.ell;
    j["rank"] = lat.rank;
    j["halfPhi"] = half;
    j["ok"] = ok;
    out << j.dump(2) << "\n";
  } else {
    out << "rank=" << lat.rank << " phi/2=" << half << " " << (ok ? "OK" : "MISMATCH") << "\n";
  }
  return ok ? kExitOk : kExitDomain;
}

int cmd_reduce(const Inputs& in, const Flags& f, std::ostream& out) {
  const DeltaVector d = parse_delta(in.ell, in.delta);
  const ReducedBody body = enumerate_reduced_baskets(in.ell, d, enumerate_options(f));
  if (f.json) {
    out << body_json(body, f).dump(2) << "\n";
  } else {
    print_body(out, body, f);
  }
  return kExitOk;
}

int cmd_analyze(const Inputs& in, const Flags& f, std::ostream& out) {
  const RationalFunction h = parse_rational_function(in.series);
  const FeasibilityReport r = analyze_series(h, enumerate_options(f));
  if (f.json) {
    ordered_json j;
    j["k2"] = to_string(r.k2);
    j["verdict"] = verdict_name(r.verdict);
    j["forcedEmpty"] = r.forced_empty;
    j["toricImpossible"] = r.toric_impossible;
    j["parts"] = ordered_json::array();
    for (const auto& [ell, body] : r.bodies) j["parts"].push_back(body_json(body, f));
    j["choices"] = ordered_json::array();
    for (const auto& c : r.choices) {
      j["choices"].push_back({{"basket", basket_json(c.basket)},
                              {"rkSquared", to_string(c.rk_squared)},
                              {"ikSquared", to_string(c.ik_squared)},
                              {"feasible", c.feasible}});
    }
    if (f.terms) j["terms"] = terms_json(h, f.terms);
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << "K^2: " << to_string(r.k2) << "\n";
  for (const auto& [ell, body] : r.bodies) print_body(out, body, f);
  out << "choices: " << r.choices.size() << "\n";
  for (const auto& c : r.choices) {
    out << "  " << to_string(c.basket) << " RK^2=" << to_string(c.rk_squared) << " IK^2=" << to_string(c.ik_squared)
        << (c.feasible ? " feasible" : " infeasible") << "\n";
  }
  out << "verdict: " << verdict_name(r.verdict) << "\n";
  if (r.forced_empty) out << "extended invisible basket: forced empty\n";
  if (r.toric_impossible) out << "toric: impossible\n";
  if (f.terms) out << "terms: " << join_terms(h, f.terms) << "\n";
  return kExitOk;
}

int cmd_bounds(const Inputs& in, const Flags& f, std::ostream& out) {
  const Basket b = parse_basket(in.basket);
  const DegreeBounds db = degree_bounds(b, {f.nmin});
  if (f.json) {
    ordered_json j;
    j["basket"] = basket_json(sorted_basket(b));
    j["bounds"] = {{"m", to_string(db.m)}, {"M", to_string(db.M)}};
    out << j.dump(2) << "\n";
  } else {
    out << "m=" << to_string(db.m) << " M=" << to_string(db.M) << "\n";
  }
  return kExitOk;
}

int cmd_count_bound(const Inputs& in, const Flags& f, std::ostream& out) {
  const DeltaParts parts = parse_parts(in.parts);
  const CountBound cb = count_bound_detail(parts, in.ell_star, enumerate_options(f));
  if (f.json) {
    ordered_json j;
    j["lStar"] = in.ell_star;
    j["maxSize"] = cb.max_size;
    j["minRkSquared"] = to_string(cb.min_rk_squared);
    j["budget"] = to_string(cb.budget);
    j["bound"] = to_string(cb.bound);
    out << j.dump(2) << "\n";
  } else {
    out << "maxSize=" << cb.max_size << " minRK^2=" << to_string(cb.min_rk_squared) << " budget=" << to_string(cb.budget)
        << "\n";
    out << "bound=" << to_string(cb.bound) << "\n";
  }
  return kExitOk;
}

int cmd_selftest(const Inputs& in, const Flags& f, std::ostream& out) {
  bool ok = true;
  auto line = [&](const std::string& name, bool pass) {
    ok = ok && pass;
    out << (pass ? "ok   " : "FAIL ") << name << "\n";
  };
  for (std::int64_t ell = 3; ell <= in.max_ell; ++ell) {
    const DeltaLattice lat = delta_lattice(ell);
    line("rank l=" + std::to_string(ell) + " " + std::to_string(lat.rank) + "=" + std::to_string(euler_phi(ell) / 2),
         static_cast<std::int64_t>(lat.rank) == euler_phi(ell) / 2);
  }
  const ResPlus& rp = res_plus(5);
  std::string deltas;
  for (const auto& m : rp.members) deltas += to_string(orbifold_contribution(m));
  line("res+ l=5 " + deltas, deltas == "(1,-2,1)(2,1,2)(3,4,3)(1,3,1)");
  const ReducedBody body = enumerate_reduced_baskets(5, parse_delta(5, "(2,1,2)"), enumerate_options(f));
  bool rk = body.baskets.size() == 4;
  for (const auto& q : body.rk_squared) rk = rk && q == Rational(-8, 5);
  line("reduce l=5 (2,1,2) 4 baskets RK^2=-8/5", rk);
  const auto r11 = analyze_series(parse_rational_function("(1+11*t+t^2)/(1-t)^3"), enumerate_options(f));
  line("analyze m=11 NO_SURFACE", r11.verdict == Verdict::NoSurface);
  out << "selftest: " << (ok ? "OK" : "FAILED") << "\n";
  return ok ? kExitOk : kExitDomain;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Hilbert-series and basket calculus for orbifold del Pezzo surfaces", "hilbasket"};
  app.require_subcommand(1, 1);
  Flags flags;
  Inputs in;
  app.add_flag("--json", flags.json, "Machine-readable output");
  app.add_flag("--full-delta", flags.full_delta, "Print delta-vectors with their zero ends");
  app.add_option("--terms", flags.terms, "Append the first N series coefficients");
  app.add_option("--jobs", flags.jobs, "Worker threads for enumeration")->check(CLI::Range(1u, 256u));
  app.add_option("--max-mu", flags.max_mu, "Ceiling on the enumeration sweep")->check(CLI::NonNegativeNumber);
  app.add_option("--nmin", flags.nmin, "Lower bound on the smooth-locus Euler number")->check(CLI::NonNegativeNumber);
  app.fallthrough();

  auto* contrib = app.add_subcommand("contrib", "Orbifold contribution and degree contribution of 1/r(1,a)");
  contrib->add_option("singularity", in.singularity, "1/r(1,a)")->required();
  auto* series = app.add_subcommand("series", "Hilbert series of a basket at given degree");
  series->add_option("basket", in.basket, "Comma-separated singularities")->required();
  series->add_option("--k2", in.k2, "Degree K^2 as p/q")->required();
  auto* res = app.add_subcommand("residue", "Classification, residue, dual and inverse");
  res->add_option("singularity", in.singularity, "1/r(1,a)")->required();
  auto* quiver = app.add_subcommand("quiver", "Residual quiver at local index l");
  quiver->add_option("l", in.ell, "Local index")->required();
  auto* rank = app.add_subcommand("delta-rank", "Rank of the delta lattice against phi(l)/2");
  rank->add_option("l", in.ell, "Local index")->required();
  auto* reduce = app.add_subcommand("reduce", "Reduced baskets with a given delta-vector");
  reduce->add_option("l", in.ell, "Local index")->required();
  reduce->add_option("delta", in.delta, "Delta-vector, e.g. (2,1,2)")->required();
  auto* analyze = app.add_subcommand("analyze", "Feasibility of a Hilbert series");
  analyze->add_option("series", in.series, "Rational function in t")->required();
  auto* bounds = app.add_subcommand("bounds", "Degree bounds for a basket");
  bounds->add_option("basket", in.basket, "Comma-separated singularities")->required();
  auto* count = app.add_subcommand("count-bound", "Bound on the number of singularities");
  count->add_option("parts", in.parts, "l:(delta) items")->required();
  count->add_option("--lstar", in.ell_star, "Gorenstein-index multiple l*")->required();
  auto* self = app.add_subcommand("selftest", "Rank sweep and local index 5 checks");
  self->add_option("--max-ell", in.max_ell, "Largest local index in the rank sweep")->check(CLI::Range(3, 200));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*contrib) return cmd_contrib(in, flags, out);
    if (*series) return cmd_series(in, flags, out);
    if (*res) return cmd_residue(in, flags, out);
    if (*quiver) return cmd_quiver(in, flags, out);
    if (*rank) return cmd_delta_rank(in, flags, out);
    if (*reduce) return cmd_reduce(in, flags, out);
    if (*analyze) return cmd_analyze(in, flags, out);
    if (*bounds) return cmd_bounds(in, flags, out);
    if (*count) return cmd_count_bound(in, flags, out);
    if (*self) return cmd_selftest(in, flags, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace hilbasket::cli
