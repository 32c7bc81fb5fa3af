#pragma once

#include "rhotensor/cache.hpp"

#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

namespace rhotensor {

/// Outer multiplicities of V(lhs) (x) V(rhs).
struct Decomposition {
  AlgebraId algebra;
  Weight lhs;
  Weight rhs;
  std::map<Weight, Integer> components;

  Integer multiplicity(const Weight& nu) const {
    auto it = components.find(nu);
    return it == components.end() ? Integer(0) : it->second;
  }
  std::vector<Weight> support() const {
    std::vector<Weight> out;
    for (const auto& [nu, m] : components) out.push_back(nu);
    return out;
  }
  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Sum of mult * dim V(nu) must equal dim V(lhs) * dim V(rhs); every
/// multiplicity must be positive. Throws InvariantError otherwise.
inline void check_conservation(const RootSystem& rs, const Decomposition& d) {
  Integer total = 0;
  for (const auto& [nu, m] : d.components) {
    if (m <= 0) throw InvariantError("decomposition has non-positive multiplicity at " + nu.tuple());
    total += m * weyl_dimension(rs, nu);
  }
  Integer expected = weyl_dimension(rs, d.lhs) * weyl_dimension(rs, d.rhs);
  if (total != expected) {
    throw InvariantError("dimension not conserved in " + d.lhs.tuple() + " x " + d.rhs.tuple() + ": " + total.str() +
                         " != " + expected.str());
  }
}

namespace detail {
inline void require_finite_dominant(const RootSystem& rs, const Weight& w, const char* what) {
  if (rs.affine()) throw std::invalid_argument(std::string(what) + ": finite type required");
  if (static_cast<int>(w.size()) != rs.rank())
    throw std::invalid_argument(std::string(what) + ": weight " + w.tuple() + " has wrong size for " + rs.id().str());
  if (!w.is_dominant()) throw std::invalid_argument(std::string(what) + ": " + w.tuple() + " is not dominant");
}
}  // namespace detail

/// Klimyk's formula: V(lam) (x) V(mu) = sum over weights nu of the smaller
/// factor of m(nu) * sign(w) * V(w(lam + nu + rho) - rho), skipping weights on
/// a wall.
inline Decomposition klimyk(const RootSystem& rs, const Weight& lam, const Weight& mu, CharacterCache& cache) {
  detail::require_finite_dominant(rs, lam, "klimyk");
  detail::require_finite_dominant(rs, mu, "klimyk");
  const bool lam_is_smaller = weyl_dimension(rs, lam) < weyl_dimension(rs, mu);
  const Weight& weight_side = lam_is_smaller ? lam : mu;
  const Weight& highest_side = lam_is_smaller ? mu : lam;

  auto ch = cache.character(rs, weight_side);
  const Weight shift = highest_side + rs.rho();
  std::unordered_map<Weight, Integer, WeightHash> acc;
  for (const auto& [dom, m] : ch->mults) {
    for (const auto& nu : orbit(rs, dom)) {
      Weight xi = shift + nu;
      const int sign = reflect_regular(rs, xi);
      if (sign == 0) continue;
      xi -= rs.rho();
      if (sign > 0)
        acc[xi] += m;
      else
        acc[xi] -= m;
    }
  }

  Decomposition out{rs.id(), lam, mu, {}};
  for (auto& [nu, m] : acc) {
    if (m < 0) throw InvariantError("klimyk: negative multiplicity at " + nu.tuple());
    if (m > 0) out.components.emplace(nu, std::move(m));
  }
  check_conservation(rs, out);
  return out;
}

inline Decomposition klimyk(const RootSystem& rs, const Weight& lam, const Weight& mu) {
  CharacterCache cache;
  return klimyk(rs, lam, mu, cache);
}

/// Independent check: multiply full characters as formal sums, then peel off
/// irreducible characters from the top.
inline Decomposition oracle_decompose(const RootSystem& rs, const Weight& lam, const Weight& mu, CharacterCache& cache) {
  detail::require_finite_dominant(rs, lam, "oracle_decompose");
  detail::require_finite_dominant(rs, mu, "oracle_decompose");
  auto a = expand_character(rs, *cache.character(rs, lam));
  auto b = expand_character(rs, *cache.character(rs, mu));

  std::unordered_map<Weight, Integer, WeightHash> residual;
  for (const auto& [wa, ma] : a)
    for (const auto& [wb, mb] : b) residual[wa + wb] += ma * mb;

  Decomposition out{rs.id(), lam, mu, {}};
  while (!residual.empty()) {
    const Weight* top = nullptr;
    std::int64_t best = 0;
    for (const auto& [w, m] : residual) {
      const std::int64_t h = rs.scaled_height(w);
      if (!top || h > best || (h == best && w < *top)) {
        top = &w;
        best = h;
      }
    }
    const Weight nu = *top;
    const Integer c = residual.at(nu);
    if (c <= 0 || !nu.is_dominant()) {
      throw InvariantError("oracle_decompose: residual has coefficient " + c.str() + " at maximal weight " + nu.tuple());
    }
    out.components.emplace(nu, c);
    for (const auto& [w, m] : expand_character(rs, *cache.character(rs, nu))) {
      auto it = residual.find(w);
      Integer v = (it == residual.end() ? Integer(0) : it->second) - c * m;
      if (v < 0) throw InvariantError("oracle_decompose: negative residual at " + w.tuple());
      if (v == 0) {
        if (it != residual.end()) residual.erase(it);
      } else {
        residual[w] = v;
      }
    }
  }
  check_conservation(rs, out);
  return out;
}

inline Decomposition oracle_decompose(const RootSystem& rs, const Weight& lam, const Weight& mu) {
  CharacterCache cache;
  return oracle_decompose(rs, lam, mu, cache);
}

/// Membership of nu in the support of V(lam) (x) V(mu).
inline bool contains_component(const RootSystem& rs, const Weight& lam, const Weight& mu, const Weight& nu,
                               CharacterCache& cache) {
  detail::require_finite_dominant(rs, nu, "contains_component");
  return klimyk(rs, lam, mu, cache).components.contains(nu);
}

/// V(d nu) in V(d lam) (x) V(d mu). Throws LatticeError unless lam + mu - nu
/// lies in the root lattice.
inline bool saturation_check(const RootSystem& rs, const Weight& lam, const Weight& mu, const Weight& nu, int d,
                             CharacterCache& cache) {
  if (d < 1) throw std::invalid_argument("saturation_check: d must be >= 1");
  detail::require_finite_dominant(rs, lam, "saturation_check");
  detail::require_finite_dominant(rs, mu, "saturation_check");
  detail::require_finite_dominant(rs, nu, "saturation_check");
  if (!in_root_lattice(rs, lam + mu - nu)) {
    throw LatticeError("saturation_check: lam + mu - nu = " + (lam + mu - nu).tuple() + " is not in the root lattice");
  }
  return contains_component(rs, d * lam, d * mu, d * nu, cache);
}

struct SchurWitness {
  Weight weight;
  Integer mult_a;
  Integer mult_b;
  friend bool operator==(const SchurWitness&, const SchurWitness&) = default;
};

struct SchurReport {
  bool dominates = true;
  std::vector<SchurWitness> witnesses;
};

/// b dominates a when every outer multiplicity of b is at least that of a.
inline SchurReport schur_compare(const Decomposition& a, const Decomposition& b) {
  if (a.algebra != b.algebra) throw std::invalid_argument("schur_compare: algebras differ");
  if (a.lhs + a.rhs != b.lhs + b.rhs) throw std::invalid_argument("schur_compare: total weights differ");
  SchurReport report;
  for (const auto& [nu, ma] : a.components) {
    Integer mb = b.multiplicity(nu);
    if (mb < ma) report.witnesses.push_back({nu, ma, mb});
  }
  report.dominates = report.witnesses.empty();
  return report;
}

struct PairOrderResult {
  bool holds = true;
  /// First positive root (simple-root coordinates) whose coroot violates the inequality.
  std::optional<RootVector> violating_root;
  explicit operator bool() const { return holds; }
};

/// (lam, mu) <= (lamP, muP): min(lam(b), mu(b)) <= min(lamP(b), muP(b)) for
/// every positive coroot b.
inline PairOrderResult pair_order_le(const RootSystem& rs, const Weight& lam, const Weight& mu, const Weight& lam_p,
                                     const Weight& mu_p) {
  for (const auto* w : {&lam, &mu, &lam_p, &mu_p}) detail::require_finite_dominant(rs, *w, "pair_order_le");
  if (lam + mu != lam_p + mu_p) throw std::invalid_argument("pair_order_le: lam + mu != lam' + mu'");
  for (std::size_t k = 0; k < rs.positive_roots().size(); ++k) {
    const int left = std::min(coroot_pairing(rs, lam, k), coroot_pairing(rs, mu, k));
    const int right = std::min(coroot_pairing(rs, lam_p, k), coroot_pairing(rs, mu_p, k));
    if (left > right) return {false, rs.positive_roots()[k]};
  }
  return {};
}

}  // namespace rhotensor
