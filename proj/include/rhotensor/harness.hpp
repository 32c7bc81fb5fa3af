#pragma once

#include "rhotensor/affine.hpp"
#include "rhotensor/tensor.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <future>
#include <mutex>
#include <thread>

namespace rhotensor {

enum class Verdict { Holds, Fails, DepthLimited, Error };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "HOLDS";
    case Verdict::Fails: return "FAILS";
    case Verdict::DepthLimited: return "DEPTH_LIMITED";
    case Verdict::Error: return "ERROR";
  }
  return "?";
}

inline Verdict parse_verdict(const std::string& s) {
  if (s == "HOLDS") return Verdict::Holds;
  if (s == "FAILS") return Verdict::Fails;
  if (s == "DEPTH_LIMITED") return Verdict::DepthLimited;
  if (s == "ERROR") return Verdict::Error;
  throw std::invalid_argument("unknown verdict '" + s + "'");
}

/// Outcome of checking that every dominant m rho + beta (beta a weight of
/// V(n rho)) is a component of V(m rho) (x) V(n rho). Affine reports carry
/// full affine weights (delta coefficient included) and are always
/// depth-qualified.
struct ConjectureReport {
  AlgebraId algebra;
  int m = 0;
  int n = 0;
  std::optional<int> depth;
  std::vector<Weight> predicted;
  std::vector<Weight> present;
  std::vector<Weight> missing;
  /// Affine only: predicted weights m rho + beta whose beta is not dominant.
  /// These lie outside the proven dominant case and are listed, not asserted.
  std::vector<Weight> open_cases;
  Verdict verdict = Verdict::Holds;
  std::string error;

  friend bool operator==(const ConjectureReport&, const ConjectureReport&) = default;
};

inline ConjectureReport make_report(const AlgebraId& id, int m, int n, std::optional<int> depth = std::nullopt) {
  ConjectureReport r;
  r.algebra = id;
  r.m = m;
  r.n = n;
  r.depth = depth;
  return r;
}

namespace detail {
inline void require_m_ge_n(int m, int n, const char* what) {
  if (n < 0 || m < n) throw std::invalid_argument(std::string(what) + ": requires m >= n >= 0");
}
}  // namespace detail

/// Dominant lam <= (m+n) rho with dom(lam - m rho) a weight of V(n rho), sorted.
inline std::vector<Weight> predicted_weights(const RootSystem& rs, int m, int n) {
  detail::require_m_ge_n(m, n, "predicted_weights");
  if (rs.affine()) throw std::invalid_argument("predicted_weights: finite type required (see affine_predicted_weights)");
  const Weight m_rho = m * rs.rho(), n_rho = n * rs.rho();
  std::vector<Weight> out;
  for (const auto& lam : dominant_weights_below(rs, (m + n) * rs.rho()))
    if (dominance_le(rs, dominant_of(rs, lam - m_rho), n_rho)) out.push_back(lam);
  return out;
}

inline ConjectureReport verify_conjecture(const RootSystem& rs, int m, int n, CharacterCache& cache) {
  detail::require_m_ge_n(m, n, "verify_conjecture");
  ConjectureReport report = make_report(rs.id(), m, n);
  report.predicted = predicted_weights(rs, m, n);
  const Decomposition dec = klimyk(rs, m * rs.rho(), n * rs.rho(), cache);
  for (const auto& [nu, mult] : dec.components) {
    if (!std::binary_search(report.predicted.begin(), report.predicted.end(), nu)) {
      throw InvariantError("verify_conjecture: component " + nu.tuple() + " of " + rs.id().str() +
                           " is not a translate of a weight of V(n rho)");
    }
  }
  for (const auto& lam : report.predicted) (dec.components.contains(lam) ? report.present : report.missing).push_back(lam);
  report.verdict = report.missing.empty() ? Verdict::Holds : Verdict::Fails;
  return report;
}

/// Dominant lam <= (m+n) rho that are not components of V(m rho) (x) V(n rho).
inline std::vector<Weight> naive_condition_scan(const RootSystem& rs, int m, int n, CharacterCache& cache) {
  detail::require_m_ge_n(m, n, "naive_condition_scan");
  const Decomposition dec = klimyk(rs, m * rs.rho(), n * rs.rho(), cache);
  std::vector<Weight> out;
  for (const auto& lam : dominant_weights_below(rs, (m + n) * rs.rho()))
    if (!dec.components.contains(lam)) out.push_back(lam);
  return out;
}

struct SupportContainmentReport {
  bool holds = true;
  /// Components of V(m rho) (x) V(n rho) missing from V((m-1) rho) (x) V((n+1) rho).
  std::vector<Weight> witnesses;
  /// Multiplicity-level comparison of the same pair.
  SchurReport schur;
};

inline SupportContainmentReport support_containment_check(const RootSystem& rs, int m, int n, CharacterCache& cache) {
  if (n < 0 || m <= n) throw std::invalid_argument("support_containment_check: requires m > n >= 0");
  const Decomposition a = klimyk(rs, m * rs.rho(), n * rs.rho(), cache);
  const Decomposition b = klimyk(rs, (m - 1) * rs.rho(), (n + 1) * rs.rho(), cache);
  SupportContainmentReport report;
  for (const auto& [nu, mult] : a.components)
    if (!b.components.contains(nu)) report.witnesses.push_back(nu);
  report.holds = report.witnesses.empty();
  report.schur = schur_compare(a, b);
  return report;
}

struct SaturationScanReport {
  int d = 1;
  std::vector<Weight> checked;
  std::vector<Weight> failures;
};

/// saturation_check(m rho, n rho, lam, d) over every predicted lam.
inline SaturationScanReport saturation_scan(const RootSystem& rs, int m, int n, int d, CharacterCache& cache) {
  SaturationScanReport report{d, {}, {}};
  const Weight m_rho = m * rs.rho(), n_rho = n * rs.rho();
  for (const auto& lam : predicted_weights(rs, m, n)) {
    report.checked.push_back(lam);
    if (!saturation_check(rs, m_rho, n_rho, lam, d, cache)) report.failures.push_back(lam);
  }
  return report;
}

/// Number of worker threads: $RHO_TENSOR_THREADS, else the hardware count.
inline unsigned thread_hint() {
  if (const char* env = std::getenv("RHO_TENSOR_THREADS"); env && *env) {
    try {
      int v = std::stoi(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// verify_conjecture for every type and every m >= n >= 0 with m + n <= max_sum.
/// Per-case failures are recorded in the report (verdict ERROR) and never
/// abort the scan. on_report, when given, is called as each case finishes
/// (serialized; order depends on scheduling). The returned vector is in
/// deterministic (type, m, n) order.
inline std::vector<ConjectureReport> scan_all(const std::vector<AlgebraId>& types, int max_sum, CharacterCache& cache,
                                              const std::function<void(const ConjectureReport&)>& on_report = {},
                                              unsigned threads = thread_hint()) {
  struct Case {
    std::size_t type;
    int m, n;
  };
  std::vector<RootSystem> systems;
  for (const auto& id : types) {
    if (id.affine) throw std::invalid_argument("scan_all: finite types only");
    systems.push_back(build_root_system(id));
  }
  std::vector<Case> cases;
  for (std::size_t t = 0; t < types.size(); ++t)
    for (int total = 0; total <= max_sum; ++total)
      for (int n = 0; 2 * n <= total; ++n) cases.push_back({t, total - n, n});

  std::vector<ConjectureReport> reports(cases.size());
  std::atomic<std::size_t> next{0};
  std::mutex emit;
  auto worker = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) {
      const auto& c = cases[i];
      ConjectureReport r;
      try {
        r = verify_conjecture(systems[c.type], c.m, c.n, cache);
      } catch (const std::exception& e) {
        r = make_report(types[c.type], c.m, c.n);
        r.verdict = Verdict::Error;
        r.error = e.what();
      }
      reports[i] = r;
      if (on_report) {
        std::lock_guard lock(emit);
        on_report(reports[i]);
      }
    }
  };
  const unsigned n_threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(cases.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n_threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return reports;
}

// ---------------------------------------------------------------------------
// Affine: delta-maximal form of the conjecture, always depth-qualified.

/// (m rho_bar + beta_bar, e) for every delta-maximal weight (beta_bar, e) of
/// V(n rho) with e <= depth whose translate is affine-dominant. Sorted by
/// (depth, finite weight).
inline std::vector<DepthWeight> affine_predicted_weights(const RootSystem& rs, int m, int n, int depth) {
  detail::require_affine(rs, "affine_predicted_weights");
  detail::require_m_ge_n(m, n, "affine_predicted_weights");
  const int total_level = (m + n) * rs.dual_coxeter();
  const Weight m_rho_bar = m * rs.rho();
  auto ch = affine_freudenthal(rs, affine_rho_multiple(rs, n), depth);
  std::vector<DepthWeight> out;
  for (const auto& dw : delta_max_weights(ch)) {
    for (const auto& beta : orbit(rs, dw.finite)) {
      Weight lam = m_rho_bar + beta;
      if (lam.is_dominant() && theta_pairing(rs, lam) <= total_level) out.push_back({lam, dw.depth});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct AffineConjectureResult {
  ConjectureReport report;
  AffineDecomposition decomposition;
};

inline AffineConjectureResult verify_affine_conjecture(const RootSystem& rs, int m, int n, int depth) {
  detail::require_affine(rs, "verify_affine_conjecture");
  detail::require_m_ge_n(m, n, "verify_affine_conjecture");
  if (n < 1) throw std::invalid_argument("verify_affine_conjecture: requires n >= 1 (positive levels)");
  const Weight m_rho = affine_rho_multiple(rs, m), n_rho = affine_rho_multiple(rs, n);
  AffineDecomposition dec = truncated_tensor(rs, m_rho, n_rho, depth);

  // Translation property: lam - m rho is a weight of V(n rho) at the component's depth.
  auto n_char = affine_freudenthal(rs, n_rho, depth);
  for (const auto& [dw, mult] : dec.components) {
    auto e = n_char.first_depth(rs, dw.finite - m * rs.rho());
    if (!e || *e > dw.depth) {
      throw InvariantError("verify_affine_conjecture: component " + dw.str() + " is not a translate of a weight of V(n rho)");
    }
  }

  ConjectureReport report = make_report(rs.id(), m, n, depth);
  const int total_level = (m + n) * rs.dual_coxeter();
  for (const auto& dw : affine_predicted_weights(rs, m, n, depth)) {
    Weight full = make_affine(rs, dw.finite, total_level, -dw.depth);
    report.predicted.push_back(full);
    (dec.contains(dw) ? report.present : report.missing).push_back(full);
    const Weight beta = dw.finite - m * rs.rho();
    if (!beta.is_dominant() || theta_pairing(rs, beta) > n * rs.dual_coxeter()) report.open_cases.push_back(full);
  }
  report.verdict = report.missing.empty() ? Verdict::DepthLimited : Verdict::Fails;
  return {std::move(report), std::move(dec)};
}

}  // namespace rhotensor
