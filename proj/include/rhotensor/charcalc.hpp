#pragma once

#include "rhotensor/rootdata.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <unordered_map>
#include <vector>

namespace rhotensor {

/// Weight multiplicities of a finite-dimensional irreducible, stored on
/// dominant representatives only.
struct DominantCharacter {
  Weight highest;
  std::map<Weight, Integer> mults;

  friend bool operator==(const DominantCharacter&, const DominantCharacter&) = default;
};

/// All dominant mu with lam - mu in Q+, sorted lexicographically.
///
/// Descends from lam by positive roots, keeping only dominant weights. Every
/// dominant weight below lam is reachable this way (Stembridge), so no
/// non-dominant intermediate weights have to be visited.
inline std::vector<Weight> dominant_weights_below(const RootSystem& rs, const Weight& lam) {
  if (!lam.is_dominant()) throw std::invalid_argument("dominant_weights_below: " + lam.tuple() + " is not dominant");
  std::unordered_set<Weight, WeightHash> seen{lam};
  std::vector<Weight> frontier{lam};
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const auto& w : frontier) {
      for (const auto& alpha : rs.positive_root_weights()) {
        Weight v = w - alpha;
        if (v.is_dominant() && seen.insert(v).second) next.push_back(std::move(v));
      }
    }
    frontier = std::move(next);
  }
  std::vector<Weight> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

struct FreudenthalOptions {
  /// When set, weights of equal height are visited in a shuffled order.
  std::optional<std::uint64_t> shuffle_seed;
};

/// Freudenthal's recursion,
///   (|lam+rho|^2 - |mu+rho|^2) m_mu = 2 sum_{alpha>0} sum_{k>=1} (mu+k alpha|alpha) m_{mu+k alpha},
/// evaluated top-down by height with the form scaled to integers.
inline DominantCharacter freudenthal(const RootSystem& rs, const Weight& lam, const FreudenthalOptions& opts = {}) {
  if (rs.affine()) throw std::invalid_argument("freudenthal: finite type required (use affine_freudenthal)");
  if (static_cast<int>(lam.size()) != rs.rank()) throw std::invalid_argument("freudenthal: weight has wrong size");
  if (!lam.is_dominant()) throw std::invalid_argument("freudenthal: " + lam.tuple() + " is not dominant");

  DominantCharacter ch{lam, {}};
  ch.mults.emplace(lam, 1);
  if (lam.is_zero()) return ch;

  std::vector<Weight> order = dominant_weights_below(rs, lam);
  if (opts.shuffle_seed) {
    std::mt19937_64 rng(*opts.shuffle_seed);
    std::shuffle(order.begin(), order.end(), rng);
  }
  std::stable_sort(order.begin(), order.end(), [&](const Weight& a, const Weight& b) {
    return rs.scaled_height(a) > rs.scaled_height(b);
  });

  const auto& roots = rs.positive_root_weights();
  std::vector<std::int64_t> root_norm, root_height;
  for (const auto& a : roots) {
    root_norm.push_back(rs.scaled_form(a, a));
    root_height.push_back(rs.scaled_height(a));
  }
  const Weight lam_rho = lam + rs.rho();
  const std::int64_t top_norm = rs.scaled_form(lam_rho, lam_rho);
  const std::int64_t top_height = rs.scaled_height(lam);

  std::unordered_map<Weight, Integer, WeightHash> known{{lam, Integer(1)}};
  for (const auto& mu : order) {
    if (mu == lam) continue;
    const std::int64_t mu_height = rs.scaled_height(mu);
    Integer sum = 0;
    for (std::size_t a = 0; a < roots.size(); ++a) {
      const std::int64_t base = rs.scaled_form(mu, roots[a]);
      Weight v = mu;
      for (int k = 1; mu_height + k * root_height[a] <= top_height; ++k) {
        v += roots[a];
        auto it = known.find(dominant_of(rs, v));
        if (it == known.end()) continue;
        sum += it->second * (base + k * root_norm[a]);
      }
    }
    const Weight mu_rho = mu + rs.rho();
    const std::int64_t denom = top_norm - rs.scaled_form(mu_rho, mu_rho);
    if (denom <= 0) {
      throw InvariantError("freudenthal: non-positive denominator at " + mu.tuple() + " for highest weight " + lam.tuple());
    }
    Integer num = 2 * sum;
    if (num % denom != 0) {
      throw InvariantError("freudenthal: non-integral multiplicity at " + mu.tuple() + " for highest weight " + lam.tuple());
    }
    Integer m = num / denom;
    if (m < 0) throw InvariantError("freudenthal: negative multiplicity at " + mu.tuple());
    if (m > 0) {
      known.emplace(mu, m);
      ch.mults.emplace(mu, std::move(m));
    }
  }
  return ch;
}

inline bool weight_set_contains(const DominantCharacter& ch, const RootSystem& rs, const Weight& beta) {
  return ch.mults.contains(dominant_of(rs, beta));
}

/// Multiplicity of an arbitrary weight, via its dominant representative.
inline Integer multiplicity_at(const DominantCharacter& ch, const RootSystem& rs, const Weight& beta) {
  auto it = ch.mults.find(dominant_of(rs, beta));
  return it == ch.mults.end() ? Integer(0) : it->second;
}

/// Every weight of the module with its multiplicity (orbits expanded).
inline std::vector<std::pair<Weight, Integer>> expand_character(const RootSystem& rs, const DominantCharacter& ch) {
  std::vector<std::pair<Weight, Integer>> out;
  for (const auto& [mu, m] : ch.mults)
    for (auto& w : orbit(rs, mu)) out.emplace_back(std::move(w), m);
  return out;
}

/// Sum of m_mu * |W mu|; equals the Weyl dimension.
inline Integer character_dimension(const RootSystem& rs, const DominantCharacter& ch) {
  Integer total = 0;
  for (const auto& [mu, m] : ch.mults) total += m * orbit(rs, mu).size();
  return total;
}

}  // namespace rhotensor
