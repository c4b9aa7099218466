#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hilbasket/basket.hpp"
#include "hilbasket/hilbert.hpp"
#include "hilbasket/int_matrix.hpp"
#include "hilbasket/quiver.hpp"

namespace hilbasket {

/// One residual from each hyperplane-inverse pair at local index l.
///
/// The member with positive first delta entry is kept; pairs are ordered by
/// (r, min(a, dual a)) of their smaller member.
struct ResPlus {
  std::int64_t ell = 0;
  std::vector<Singularity> members;
  std::vector<Singularity> inverses;
  IntMatrix phi;  // columns are the members' delta-vectors
};

const ResPlus& res_plus(std::int64_t ell);

// Basket of |v_i| copies of member i (v_i > 0) or of its inverse (v_i < 0).
Basket interpret(const ResPlus& rp, const std::vector<std::int64_t>& coords);
// Inverse of interpret; throws NotRealizable if a member and its inverse both occur.
std::vector<std::int64_t> signed_coordinates(const ResPlus& rp, const Basket& basket);

struct EnumerateOptions {
  std::int64_t max_mu = -1;              // ceiling on the sweep; negative for none
  unsigned jobs = 1;                     // worker threads for the sweep
  std::uint64_t node_budget = 200'000'000;  // search nodes before giving up
};

struct ReducedBody {
  std::int64_t ell = 0;
  DeltaVector delta;
  bool realizable = false;
  std::vector<std::int64_t> particular;
  std::vector<IntVector> kernel_basis;
  IndecMultiset base;  // reduced base multiset of indecomposables
  std::int64_t mu_max = 0;
  std::vector<Basket> baskets;
  std::vector<std::vector<std::int64_t>> coordinates;
  std::vector<Rational> rk_squared;
};

ReducedBody enumerate_reduced_baskets(std::int64_t ell, const DeltaVector& delta, const EnumerateOptions& opts = {});

// u lies in v + L_v: every coordinate where v is nonzero moves only away from zero.
bool features_in(const std::vector<std::int64_t>& u, const std::vector<std::int64_t>& v);

enum class Verdict { Feasible, NoSurface };
std::string verdict_name(Verdict v);

struct Choice {
  Basket basket;
  Rational rk_squared;
  Rational ik_squared;
  bool feasible = false;
};

struct FeasibilityReport {
  Rational k2;
  DeltaParts parts;
  std::map<std::int64_t, ReducedBody> bodies;
  std::vector<Choice> choices;
  Verdict verdict = Verdict::NoSurface;
  bool forced_empty = false;      // every feasible choice leaves no invisible budget
  bool toric_impossible = false;  // no feasible choice leaves room for a cancelling tuple
};

inline constexpr std::size_t kMaxChoices = 1'000'000;

FeasibilityReport analyze_series(const RationalFunction& h, const EnumerateOptions& opts = {});

struct DegreeBoundsConfig {
  std::int64_t n_min = 0;
};

struct DegreeBounds {
  Rational m;
  Rational M;
};

DegreeBounds degree_bounds(const Basket& basket, const DegreeBoundsConfig& cfg = {});

struct CountBound {
  std::int64_t max_size = 0;
  Rational min_rk_squared;
  Integer budget;
  Integer bound;
};

CountBound count_bound_detail(const DeltaParts& q, std::int64_t ell_star, const EnumerateOptions& opts = {});
Integer count_bound(const DeltaParts& q, std::int64_t ell_star, const EnumerateOptions& opts = {});

struct PsiInvariants {
  IndecMultiset psi;
  IndecMultiset psi_tilde;
};

PsiInvariants psi_invariants(const Basket& extended, std::int64_t ell);

}  // namespace hilbasket
