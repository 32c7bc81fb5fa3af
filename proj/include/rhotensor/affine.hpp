#pragma once

#include "rhotensor/charcalc.hpp"

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

namespace rhotensor {

// Affine weights are Weight values with rank+1 coordinates over omega_0..omega_r
// plus a delta coefficient. A weight of V(Lam) lies at depth d when its delta
// coefficient is delta(Lam) - d; its finite part is then
// Lam_bar + d*theta - (non-negative combination of finite simple roots).

/// A finite weight placed at a delta-depth below some reference weight.
struct DepthWeight {
  Weight finite;
  int depth = 0;
  friend bool operator==(const DepthWeight&, const DepthWeight&) = default;
  friend auto operator<=>(const DepthWeight& a, const DepthWeight& b) {
    if (auto c = a.depth <=> b.depth; c != 0) return c;
    return a.finite <=> b.finite;
  }
  std::string str() const { return finite.tuple() + "@" + std::to_string(depth); }
};

/// Weight multiplicities of an integrable highest-weight module, one slice
/// per delta-depth 0..depth. Each slice is keyed by finite-dominant
/// representatives; slices are invariant under the finite Weyl group.
struct TruncatedAffineCharacter {
  Weight highest;
  int depth = 0;
  std::vector<std::map<Weight, Integer>> slices;

  Integer multiplicity(const RootSystem& rs, int d, const Weight& finite) const {
    if (d < 0 || d > depth) return 0;
    auto it = slices[d].find(dominant_of(rs, finite));
    return it == slices[d].end() ? Integer(0) : it->second;
  }
  /// Shallowest depth at which the finite weight occurs (its delta-maximal depth).
  std::optional<int> first_depth(const RootSystem& rs, const Weight& finite) const {
    const Weight dom = dominant_of(rs, finite);
    for (int d = 0; d <= depth; ++d)
      if (slices[d].contains(dom)) return d;
    return std::nullopt;
  }
};

namespace detail {
inline void require_affine(const RootSystem& rs, const char* what) {
  if (!rs.affine()) throw std::invalid_argument(std::string(what) + ": affine algebra required");
}
inline void require_affine_weight(const RootSystem& rs, const Weight& w, const char* what) {
  if (static_cast<int>(w.size()) != rs.rank() + 1)
    throw std::invalid_argument(std::string(what) + ": " + w.tuple() + " is not an affine weight of " + rs.id().str());
}
}  // namespace detail

/// mρ as an affine weight (level m * h^vee).
inline Weight affine_rho_multiple(const RootSystem& rs, int m) {
  Weight w(static_cast<std::size_t>(rs.rank() + 1));
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = m;
  return w;
}

/// Affine Freudenthal recursion truncated at the given depth. Positive roots:
/// alpha + j delta (alpha finite positive and j >= 0, or alpha finite negative
/// and j >= 1; multiplicity 1) and j delta (j >= 1, multiplicity rank).
/// Finite-dominant weights that are not affine-dominant are obtained from
/// shallower slices through the reflection s_0.
inline TruncatedAffineCharacter affine_freudenthal(const RootSystem& rs, const Weight& top, int depth) {
  detail::require_affine(rs, "affine_freudenthal");
  detail::require_affine_weight(rs, top, "affine_freudenthal");
  if (depth < 0) throw std::invalid_argument("affine_freudenthal: depth must be >= 0");
  if (!top.is_dominant()) throw std::invalid_argument("affine_freudenthal: " + top.tuple() + " is not dominant");
  const int lvl = level(rs, top);
  const Weight top_finite = finite_part(top);

  if (lvl <= 0) throw std::invalid_argument("affine_freudenthal: level must be positive");

  TruncatedAffineCharacter ch{top, depth, std::vector<std::map<Weight, Integer>>(depth + 1)};

  const std::int64_t N = rs.form_scale();
  const std::int64_t h = rs.dual_coxeter();
  const Weight& theta = rs.highest_root_weight();
  std::vector<Weight> real_roots;
  std::vector<std::int64_t> real_norm;
  for (const auto& a : rs.positive_root_weights()) {
    real_roots.push_back(a);
    real_roots.push_back(-a);
  }
  for (const auto& a : real_roots) real_norm.push_back(rs.scaled_form(a, a));
  const std::size_t n_pos = rs.positive_root_weights().size();

  const Weight top_rho = top_finite + rs.rho();
  const std::int64_t top_norm = rs.scaled_form(top_rho, top_rho);
  const std::int64_t top_finite_norm = rs.scaled_form(top_finite, top_finite);

  std::vector<std::unordered_map<Weight, Integer, WeightHash>> known(depth + 1);
  auto lookup = [&](int d, const Weight& finite) -> const Integer* {
    if (d < 0) return nullptr;
    auto it = known[d].find(dominant_of(rs, finite));
    return it == known[d].end() ? nullptr : &it->second;
  };

  for (int d = 0; d <= depth; ++d) {
    const Weight slice_top = top_finite + d * theta;
    const std::int64_t slice_top_height = rs.scaled_height(slice_top);
    // (Lam|Lam) - (mu|mu) >= 0 for every weight mu.
    const std::int64_t norm_bound = top_finite_norm + 2 * static_cast<std::int64_t>(lvl) * d * N;
    std::vector<Weight> candidates;
    for (auto& mu : dominant_weights_below(rs, slice_top))
      if (rs.scaled_form(mu, mu) <= norm_bound) candidates.push_back(std::move(mu));
    std::stable_sort(candidates.begin(), candidates.end(), [&](const Weight& a, const Weight& b) {
      return rs.scaled_height(a) > rs.scaled_height(b);
    });

    for (const auto& mu : candidates) {
      Integer m = 0;
      const int c = lvl - theta_pairing(rs, mu);
      if (d == 0 && mu == top_finite) {
        m = 1;
      } else if (c < 0) {
        // s_0 moves the weight up by |c| alpha_0 = |c| (delta - theta).
        if (const Integer* v = lookup(d + c, mu + c * theta)) m = *v;
      } else {
        Integer sum = 0;
        const std::int64_t mu_height = rs.scaled_height(mu);
        for (std::size_t a = 0; a < n_pos; ++a) {
          const Weight& alpha = real_roots[2 * a];
          const std::int64_t base = rs.scaled_form(mu, alpha);
          const std::int64_t alpha_height = rs.scaled_height(alpha);
          Weight v = mu;
          for (int k = 1; mu_height + k * alpha_height <= slice_top_height; ++k) {
            v += alpha;
            if (const Integer* x = lookup(d, v)) sum += *x * (base + k * real_norm[2 * a]);
          }
        }
        for (int j = 1; j <= d; ++j) {
          for (std::size_t a = 0; a < real_roots.size(); ++a) {
            const Weight& alpha = real_roots[a];
            const std::int64_t base = rs.scaled_form(mu, alpha) + static_cast<std::int64_t>(j) * lvl * N;
            Weight v = mu;
            for (int k = 1; k * j <= d; ++k) {
              v += alpha;
              if (const Integer* x = lookup(d - k * j, v)) sum += *x * (base + k * real_norm[a]);
            }
          }
          const std::int64_t imaginary = static_cast<std::int64_t>(rs.rank()) * j * lvl * N;
          for (int k = 1; k * j <= d; ++k)
            if (const Integer* x = lookup(d - k * j, mu)) sum += *x * imaginary;
        }
        const Weight mu_rho = mu + rs.rho();
        const std::int64_t denom = top_norm - rs.scaled_form(mu_rho, mu_rho) + 2 * (lvl + h) * d * N;
        if (denom <= 0) {
          throw InvariantError("affine_freudenthal: non-positive denominator at " + mu.tuple() + " depth " +
                               std::to_string(d) + " for " + top.tuple());
        }
        Integer num = 2 * sum;
        if (num % denom != 0) {
          throw InvariantError("affine_freudenthal: non-integral multiplicity at " + mu.tuple() + " depth " +
                               std::to_string(d));
        }
        m = num / denom;
      }
      if (m < 0) throw InvariantError("affine_freudenthal: negative multiplicity at " + mu.tuple());
      if (m > 0) known[d].emplace(mu, m);
    }
    ch.slices[d] = std::map<Weight, Integer>(known[d].begin(), known[d].end());
  }
  return ch;
}

/// (beta, d) with beta finite-dominant, present at depth d and absent at d - 1.
inline std::vector<DepthWeight> delta_max_weights(const TruncatedAffineCharacter& ch) {
  std::vector<DepthWeight> out;
  for (int d = 0; d <= ch.depth; ++d)
    for (const auto& [mu, m] : ch.slices[d])
      if (d == 0 || !ch.slices[d - 1].contains(mu)) out.push_back({mu, d});
  std::sort(out.begin(), out.end());
  return out;
}

/// Components V(nu) of V(lhs) (x) V(rhs), nu recorded by its finite dominant
/// part and its delta-depth below lhs + rhs.
struct AffineDecomposition {
  AlgebraId algebra;
  Weight lhs;
  Weight rhs;
  int depth = 0;
  std::map<DepthWeight, Integer> components;

  bool contains(const DepthWeight& dw) const { return components.contains(dw); }
  /// Components whose delta-shift by +1 is not a component.
  std::vector<DepthWeight> delta_maximal() const {
    std::vector<DepthWeight> out;
    for (const auto& [dw, m] : components)
      if (dw.depth == 0 || !components.contains({dw.finite, dw.depth - 1})) out.push_back(dw);
    return out;
  }
  /// The full affine weight of a component.
  Weight affine_weight(const RootSystem& rs, const DepthWeight& dw) const {
    return make_affine(rs, dw.finite, level(rs, lhs) + level(rs, rhs), lhs.delta() + rhs.delta() - dw.depth);
  }
};

namespace detail {
inline std::vector<std::pair<Weight, Integer>> expand_slice(const RootSystem& rs, const std::map<Weight, Integer>& slice) {
  std::vector<std::pair<Weight, Integer>> out;
  for (const auto& [mu, m] : slice)
    for (auto& w : orbit(rs, mu)) out.emplace_back(std::move(w), m);
  return out;
}
}  // namespace detail

/// Truncated decomposition by highest-weight extraction. The product of the
/// two truncated characters is formed slice by slice (finite-dominant part
/// only); components are then peeled off by increasing depth and, within a
/// depth, by decreasing height.
inline AffineDecomposition truncated_tensor(const RootSystem& rs, const Weight& lhs, const Weight& rhs, int depth) {
  detail::require_affine(rs, "truncated_tensor");
  detail::require_affine_weight(rs, lhs, "truncated_tensor");
  detail::require_affine_weight(rs, rhs, "truncated_tensor");
  if (level(rs, lhs) <= 0 || level(rs, rhs) <= 0) throw std::invalid_argument("truncated_tensor: levels must be positive");
  const int total_level = level(rs, lhs) + level(rs, rhs);

  auto a = affine_freudenthal(rs, lhs, depth);
  auto b = affine_freudenthal(rs, rhs, depth);
  std::vector<std::vector<std::pair<Weight, Integer>>> ea, eb;
  for (int d = 0; d <= depth; ++d) {
    ea.push_back(detail::expand_slice(rs, a.slices[d]));
    eb.push_back(detail::expand_slice(rs, b.slices[d]));
  }

  AffineDecomposition out{rs.id(), lhs, rhs, depth, {}};
  std::map<Weight, std::shared_ptr<const TruncatedAffineCharacter>> component_chars;
  const int rank = rs.rank();

  for (int d = 0; d <= depth; ++d) {
    std::unordered_map<Weight, Integer, WeightHash> residual;
    for (int d1 = 0; d1 <= d; ++d1) {
      for (const auto& [wa, ma] : ea[d1]) {
        for (const auto& [wb, mb] : eb[d - d1]) {
          bool dominant = true;
          for (int i = 0; i < rank && dominant; ++i) dominant = wa[i] + wb[i] >= 0;
          if (dominant) residual[wa + wb] += ma * mb;
        }
      }
    }
    for (const auto& [dw, mult] : out.components) {
      const auto& slice = component_chars.at(dw.finite)->slices[d - dw.depth];
      for (const auto& [w, m] : slice) residual[w] -= mult * m;
    }

    std::vector<Weight> order;
    for (const auto& [w, m] : residual) order.push_back(w);
    std::sort(order.begin(), order.end(), [&](const Weight& x, const Weight& y) {
      const auto hx = rs.scaled_height(x), hy = rs.scaled_height(y);
      return hx != hy ? hx > hy : x < y;
    });
    for (const auto& w : order) {
      const Integer r = residual[w];
      if (r == 0) continue;
      if (r < 0) {
        throw InvariantError("truncated_tensor: negative residual " + r.str() + " at " + w.tuple() + " depth " +
                             std::to_string(d) + " in " + lhs.tuple() + " x " + rhs.tuple());
      }
      if (theta_pairing(rs, w) > total_level) {
        throw InvariantError("truncated_tensor: positive residual at non-dominant " + w.tuple() + " depth " +
                             std::to_string(d) + " in " + lhs.tuple() + " x " + rhs.tuple());
      }
      auto& cch = component_chars[w];
      if (!cch) {
        cch = std::make_shared<const TruncatedAffineCharacter>(
            affine_freudenthal(rs, make_affine(rs, w, total_level, 0), depth - d));
      }
      out.components.emplace(DepthWeight{w, d}, r);
      for (const auto& [v, m] : cch->slices[0]) residual[v] -= r * m;
    }
    for (const auto& [w, m] : residual) {
      if (m != 0) {
        throw InvariantError("truncated_tensor: residual " + m.str() + " left at " + w.tuple() + " depth " +
                             std::to_string(d));
      }
    }
  }
  return out;
}

/// Delta-maximal depth of a finite weight in V(top), growing the truncation
/// until it appears. Throws if it does not appear within max_depth.
inline int delta_max_depth(const RootSystem& rs, const Weight& top, const Weight& finite, int max_depth = 64) {
  for (int depth = 4;; depth *= 2) {
    depth = std::min(depth, max_depth);
    auto ch = affine_freudenthal(rs, top, depth);
    if (auto e = ch.first_depth(rs, finite)) return *e;
    if (depth == max_depth) {
      throw std::invalid_argument(finite.tuple() + " is not a weight of V" + top.tuple() + " up to delta-shift (searched to depth " +
                                  std::to_string(max_depth) + ")");
    }
  }
}

/// For affine sl2: N = min(k1, k2) where lam - m rho + k1 delta is delta-maximal
/// in V(n rho) and lam - n rho + k2 delta is delta-maximal in V(m rho). The
/// delta-maximal component through lam is V(lam + N delta).
inline int sl2_delta_max_rule(const RootSystem& rs, int m, int n, const Weight& lam) {
  if (!(rs.affine() && rs.id().family == 'A' && rs.rank() == 1)) throw std::invalid_argument("sl2_delta_max_rule: algebra must be A1~");
  detail::require_affine_weight(rs, lam, "sl2_delta_max_rule");
  if (m < n || n < 0) throw std::invalid_argument("sl2_delta_max_rule: requires m >= n >= 0");
  if (!lam.is_dominant()) throw std::invalid_argument("sl2_delta_max_rule: " + lam.tuple() + " is not dominant");
  const Weight total = affine_rho_multiple(rs, m + n);
  if (level(rs, lam) != level(rs, total) || !in_root_lattice(rs, finite_part(total) - finite_part(lam))) {
    throw std::invalid_argument("sl2_delta_max_rule: " + lam.tuple() + " is not congruent to (m+n) rho");
  }
  const int lam_depth = -lam.delta();
  const Weight lam_f = finite_part(lam);
  const Weight rho_f = rs.rho();
  const int e1 = delta_max_depth(rs, affine_rho_multiple(rs, n), lam_f - m * rho_f);
  const int e2 = delta_max_depth(rs, affine_rho_multiple(rs, m), lam_f - n * rho_f);
  return std::min(lam_depth - e1, lam_depth - e2);
}

// ---------------------------------------------------------------------------
// GKO coset Virasoro scalars

/// (lam | lam + 2 rho) for an affine weight.
inline Rational casimir_value(const RootSystem& rs, const Weight& lam) {
  const Weight rho = affine_rho_multiple(rs, 1);
  return bilinear_form(rs, lam, lam + 2 * rho);
}

/// dim(g) * (l/(l+h) + m/(m+h) - (l+m)/(l+m+h)).
inline Rational gko_central_charge(const RootSystem& rs, int level_l, int level_m) {
  detail::require_affine(rs, "gko_central_charge");
  if (level_l < 0 || level_m < 0) throw std::invalid_argument("gko_central_charge: levels must be non-negative");
  const int h = rs.dual_coxeter();
  return Rational(rs.finite_dimension()) *
         (Rational(level_l, level_l + h) + Rational(level_m, level_m + h) - Rational(level_l + level_m, level_l + level_m + h));
}

/// Eigenvalue of L_0^GKO on the component V(nu) of V(lam) (x) V(mu).
inline Rational gko_l0_scalar(const RootSystem& rs, const Weight& lam, const Weight& mu, const Weight& nu) {
  detail::require_affine(rs, "gko_l0_scalar");
  for (const auto* w : {&lam, &mu, &nu}) detail::require_affine_weight(rs, *w, "gko_l0_scalar");
  const int l = level(rs, lam), m = level(rs, mu);
  if (l <= 0 || m <= 0) throw std::invalid_argument("gko_l0_scalar: levels must be positive");
  if (level(rs, nu) != l + m) throw std::invalid_argument("gko_l0_scalar: level of nu must be the sum of levels");
  const int h = rs.dual_coxeter();
  return Rational(1, 2) * (casimir_value(rs, lam) / (l + h) + casimir_value(rs, mu) / (m + h) - casimir_value(rs, nu) / (l + m + h));
}

struct GkoReport {
  Rational central_charge;
  Rational l0_scalar;
  std::array<Rational, 4> certificate_terms;
  Rational denominator;
};

/// The L_0 scalar on V(m rho + beta) split into four manifestly non-negative
/// summands over D = 2 h (m+1)(n+1)(m+n+1). beta_char must be the truncated
/// character of V(n rho) deep enough to contain beta.
inline GkoReport gko_positivity_certificate(const RootSystem& rs, int m, int n, const Weight& beta,
                                            const TruncatedAffineCharacter& beta_char) {
  detail::require_affine(rs, "gko_positivity_certificate");
  detail::require_affine_weight(rs, beta, "gko_positivity_certificate");
  if (m < n || n < 1) throw std::invalid_argument("gko_positivity_certificate: requires m >= n >= 1");
  const Weight m_rho = affine_rho_multiple(rs, m), n_rho = affine_rho_multiple(rs, n);
  if (beta_char.highest != n_rho) throw std::invalid_argument("gko_positivity_certificate: character is not that of V(n rho)");
  if (level(rs, beta) != level(rs, n_rho)) throw std::invalid_argument("gko_positivity_certificate: beta has the wrong level");
  const int beta_depth = -beta.delta();
  if (beta_depth > beta_char.depth) throw std::invalid_argument("gko_positivity_certificate: beta lies below the truncation");
  if (beta_char.multiplicity(rs, beta_depth, finite_part(beta)) == 0) {
    throw std::invalid_argument("gko_positivity_certificate: " + beta.tuple() + " is not a weight of V(n rho)");
  }

  const Weight rho = affine_rho_multiple(rs, 1);
  const Rational pq = Rational((m + 1) * (n + 1));
  const Weight gap = n_rho - beta;
  GkoReport r;
  r.certificate_terms[0] = pq * bilinear_form(rs, 2 * rho, gap);
  r.certificate_terms[1] = pq * (bilinear_form(rs, n_rho, n_rho) - bilinear_form(rs, beta, beta));
  r.certificate_terms[2] = 2 * pq * bilinear_form(rs, m_rho, gap);
  r.certificate_terms[3] = Rational(m + n + 2) * bilinear_form(rs, m_rho, n_rho);
  r.denominator = Rational(2 * rs.dual_coxeter() * (m + 1) * (n + 1) * (m + n + 1));
  r.central_charge = gko_central_charge(rs, level(rs, m_rho), level(rs, n_rho));
  r.l0_scalar = gko_l0_scalar(rs, m_rho, n_rho, m_rho + beta);

  for (int i = 0; i < 3; ++i)
    if (r.certificate_terms[i] < 0) throw InvariantError("gko certificate term " + std::to_string(i + 1) + " is negative");
  if (r.certificate_terms[3] <= 0) throw InvariantError("gko certificate term 4 is not positive");
  Rational sum = 0;
  for (const auto& t : r.certificate_terms) sum += t;
  if (sum / r.denominator != r.l0_scalar) {
    throw InvariantError("gko certificate sum " + to_string(sum / r.denominator) + " != L0 scalar " + to_string(r.l0_scalar));
  }
  return r;
}

inline GkoReport gko_positivity_certificate(const RootSystem& rs, int m, int n, const Weight& beta) {
  detail::require_affine_weight(rs, beta, "gko_positivity_certificate");
  return gko_positivity_certificate(rs, m, n, beta,
                                    affine_freudenthal(rs, affine_rho_multiple(rs, n), std::max(0, -beta.delta())));
}

enum class DeltaString { Unbroken, GapAtOne };

inline const char* to_string(DeltaString s) { return s == DeltaString::Unbroken ? "UNBROKEN" : "GAP_AT_ONE"; }

/// Positive L_0 scalar on a delta-maximal component: the string below it is
/// unbroken. Zero: it skips depth 1 and resumes from depth 2.
inline DeltaString delta_string_classify(const Rational& scalar) {
  if (scalar < 0) throw InvariantError("delta_string_classify: negative L0 scalar " + to_string(scalar) + " on a unitary module");
  return scalar > 0 ? DeltaString::Unbroken : DeltaString::GapAtOne;
}

/// Least k with V(nu - k delta) a component, searched over k <= depth.
/// nullopt means inconclusive within the truncation.
inline std::optional<int> kac_wakimoto_check(const RootSystem& rs, const Weight& lhs, const Weight& rhs, const Weight& nu,
                                             int depth) {
  detail::require_affine(rs, "kac_wakimoto_check");
  for (const auto* w : {&lhs, &rhs, &nu}) detail::require_affine_weight(rs, *w, "kac_wakimoto_check");
  if (!nu.is_dominant()) throw std::invalid_argument("kac_wakimoto_check: " + nu.tuple() + " is not dominant");
  if (level(rs, lhs) + level(rs, rhs) != level(rs, nu) ||
      !in_root_lattice(rs, finite_part(lhs) + finite_part(rhs) - finite_part(nu))) {
    throw LatticeError("kac_wakimoto_check: lhs + rhs - nu is not in the affine root lattice");
  }
  const int offset = lhs.delta() + rhs.delta() - nu.delta();
  const int k0 = std::max(0, -offset);
  if (k0 > depth) return std::nullopt;
  auto dec = truncated_tensor(rs, lhs, rhs, offset + depth);
  const Weight nf = finite_part(nu);
  for (int k = k0; k <= depth; ++k)
    if (dec.contains({nf, offset + k})) return k;
  return std::nullopt;
}

}  // namespace rhotensor
