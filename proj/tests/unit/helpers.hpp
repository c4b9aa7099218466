#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "hilbasket/hilbert.hpp"
#include "hilbasket/singularity.hpp"

namespace testing_helpers {

inline std::vector<std::int64_t> ints(const std::vector<hilbasket::Integer>& v) {
  std::vector<std::int64_t> out;
  for (const auto& x : v) out.push_back(hilbasket::to_int64(x));
  return out;
}

inline std::vector<hilbasket::Rational> rationals(const std::vector<hilbasket::Integer>& v) {
  return {v.begin(), v.end()};
}

inline hilbasket::DeltaVector delta(std::int64_t ell, std::vector<std::int64_t> e) {
  hilbasket::DeltaVector d;
  d.ell = ell;
  for (auto x : e) d.entries.emplace_back(x);
  return d;
}

// Uniform singularity with the given local index and width; nullopt if none exists.
inline std::optional<hilbasket::Singularity> random_singularity(std::mt19937_64& rng, std::int64_t ell, std::int64_t k) {
  const std::int64_t r = k * ell;
  if (r == 1) return hilbasket::Singularity::smooth();
  std::vector<hilbasket::Singularity> options;
  for (std::int64_t c = 0; c < ell; ++c) {
    if (hilbasket::gcd64(c, ell) != 1) continue;
    const std::int64_t a = hilbasket::mod64(k * c - 1, r);
    if (a != 0 && hilbasket::gcd64(r, a) == 1) options.push_back({r, a});
  }
  if (options.empty()) return std::nullopt;
  return options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
}

}  // namespace testing_helpers
