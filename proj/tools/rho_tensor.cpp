// rho-tensor: exact tensor-product decompositions and conjecture checks for
// simple and untwisted affine Lie algebras.
//
// Exit codes: 0 success, 1 verified negative, 2 usage or environment error,
// 3 internal invariant failure.

#include "rhotensor.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace rt = rhotensor;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kInternal = 3;

struct Globals {
  std::string format = "table";
  bool no_cache = false;
};

rt::OutputFormat output_format(const Globals& g) { return rt::parse_format(g.format); }

std::unique_ptr<rt::CharacterCache> open_cache(const Globals& g) {
  if (g.no_cache) return std::make_unique<rt::CharacterCache>();
  auto cache = std::make_unique<rt::CharacterCache>(rt::CharacterCache::default_directory());
  try {
    cache->ensure_writable();
  } catch (const std::runtime_error& e) {
    std::cerr << "warning: " << e.what() << "; continuing without a persistent cache\n";
    return std::make_unique<rt::CharacterCache>();
  }
  return cache;
}

rt::RootSystem algebra_arg(const std::string& text, std::optional<bool> want_affine = std::nullopt) {
  auto id = rt::parse_algebra(text);
  if (want_affine && id.affine != *want_affine) {
    throw std::invalid_argument(text + ": this command needs " + (*want_affine ? "an affine (trailing ~)" : "a finite") +
                                " algebra");
  }
  return rt::build_root_system(id);
}

rt::Weight weight_arg(const rt::RootSystem& rs, const std::string& text) {
  rt::Weight w = rt::parse_weight(text);
  if (static_cast<int>(w.size()) != rs.weight_size()) {
    throw std::invalid_argument("weight " + text + " needs " + std::to_string(rs.weight_size()) + " coordinates for " +
                                rs.id().str());
  }
  if (!rs.affine() && w.delta() != 0) throw std::invalid_argument("weight " + text + ": delta shift on a finite algebra");
  return w;
}

rt::Weight dominant_arg(const rt::RootSystem& rs, const std::string& text) {
  rt::Weight w = weight_arg(rs, text);
  if (!w.is_dominant()) throw std::invalid_argument("weight " + text + " is not dominant");
  return w;
}

void emit_weight_list(const Globals& g, const std::string& kind, const rt::AlgebraId& id, const std::vector<rt::Weight>& ws,
                      rt::Json extra = rt::Json::object()) {
  switch (output_format(g)) {
    case rt::OutputFormat::Json: {
      rt::Json j{{"algebra", id.str()}};
      for (auto& [k, v] : extra.items()) j[k] = v;
      j["weights"] = rt::weights_to_json(ws);
      j["meta"] = rt::meta(kind);
      rt::write_json(std::cout, j);
      break;
    }
    case rt::OutputFormat::Csv:
      std::cout << rt::coordinate_header(ws.empty() ? 0 : ws.front().size()) << "\n";
      for (const auto& w : ws) std::cout << w.str() << "\n";
      break;
    case rt::OutputFormat::Table:
      for (const auto& w : ws) std::cout << w.tuple() << "\n";
      std::cout << ws.size() << " weights\n";
      break;
  }
}

// ---------------------------------------------------------------------------

int cmd_decompose(const Globals& g, const std::string& alg, const std::string& lhs, const std::string& rhs, bool oracle) {
  auto rs = algebra_arg(alg, false);
  auto lam = dominant_arg(rs, lhs), mu = dominant_arg(rs, rhs);
  auto cache = open_cache(g);
  auto dec = oracle ? rt::oracle_decompose(rs, lam, mu, *cache) : rt::klimyk(rs, lam, mu, *cache);
  switch (output_format(g)) {
    case rt::OutputFormat::Json: rt::write_json(std::cout, rt::to_json(dec)); break;
    case rt::OutputFormat::Csv: std::cout << rt::decomposition_csv(dec); break;
    case rt::OutputFormat::Table: std::cout << rt::decomposition_table(dec); break;
  }
  return kOk;
}

int cmd_weights(const Globals& g, const std::string& alg, const std::string& highest, int depth) {
  auto rs = algebra_arg(alg);
  auto lam = dominant_arg(rs, highest);
  if (!rs.affine()) {
    auto cache = open_cache(g);
    auto ch = cache->character(rs, lam);
    switch (output_format(g)) {
      case rt::OutputFormat::Json: rt::write_json(std::cout, rt::to_json(rs.id(), *ch)); break;
      case rt::OutputFormat::Csv: std::cout << rt::character_csv(*ch); break;
      case rt::OutputFormat::Table: std::cout << rt::character_table(rs, *ch); break;
    }
    return kOk;
  }
  auto ch = rt::affine_freudenthal(rs, lam, depth);
  switch (output_format(g)) {
    case rt::OutputFormat::Json: {
      rt::Json slices = rt::Json::array();
      for (int d = 0; d <= depth; ++d) {
        rt::Json entries = rt::Json::array();
        for (const auto& [mu, m] : ch.slices[d]) entries.push_back({{"weight", rt::weight_to_json(mu)}, {"mult", m.str()}});
        slices.push_back({{"depth", d}, {"weights", entries}});
      }
      rt::write_json(std::cout, {{"algebra", rs.id().str()},
                                 {"highest", rt::weight_to_json(lam)},
                                 {"depth", depth},
                                 {"slices", slices},
                                 {"meta", rt::meta("affine-character")}});
      break;
    }
    case rt::OutputFormat::Csv:
      std::cout << "depth," << rt::coordinate_header(rs.rank()) << ",mult\n";
      for (int d = 0; d <= depth; ++d)
        for (const auto& [mu, m] : ch.slices[d]) std::cout << d << "," << mu.str() << "," << m << "\n";
      break;
    case rt::OutputFormat::Table:
      std::cout << "V" << lam.tuple() << " of " << rs.id().str() << ", level " << rt::level(rs, lam) << "\n";
      for (int d = 0; d <= depth; ++d) {
        std::cout << "depth " << d << ":";
        for (auto it = ch.slices[d].rbegin(); it != ch.slices[d].rend(); ++it)
          std::cout << " " << it->first.tuple() << "^" << it->second;
        std::cout << "\n";
      }
      break;
  }
  return kOk;
}

void emit_reports(const Globals& g, const std::vector<rt::ConjectureReport>& reports, bool single) {
  switch (output_format(g)) {
    case rt::OutputFormat::Json:
      if (single) {
        rt::write_json(std::cout, rt::to_json(reports.front()));
      } else {
        rt::Json arr = rt::Json::array();
        for (const auto& r : reports) arr.push_back(rt::to_json(r));
        rt::write_json(std::cout, {{"reports", arr}, {"meta", rt::meta("scan")}});
      }
      break;
    case rt::OutputFormat::Csv: std::cout << rt::reports_csv(reports); break;
    case rt::OutputFormat::Table:
      for (const auto& r : reports) {
        std::cout << rt::report_table(r);
        if (single && !r.present.empty()) std::cout << "  present: " << rt::join_weights(r.present) << "\n";
      }
      break;
  }
}

int verdict_exit(const std::vector<rt::ConjectureReport>& reports) {
  int code = kOk;
  for (const auto& r : reports) {
    if (r.verdict == rt::Verdict::Error) return kInternal;
    if (r.verdict == rt::Verdict::Fails) code = kNegative;
  }
  return code;
}

int cmd_conjecture(const Globals& g, const std::string& alg, int m, int n, int depth) {
  auto rs = algebra_arg(alg);
  rt::ConjectureReport report;
  if (rs.affine()) {
    report = rt::verify_affine_conjecture(rs, m, n, depth).report;
  } else {
    auto cache = open_cache(g);
    report = rt::verify_conjecture(rs, m, n, *cache);
  }
  emit_reports(g, {report}, true);
  return verdict_exit({report});
}

int cmd_scan(const Globals& g, const std::vector<std::string>& algs, int max_sum) {
  if (algs.empty()) throw CLI::ValidationError("scan", "at least one algebra is required");
  std::vector<rt::AlgebraId> types;
  for (const auto& a : algs) {
    auto id = rt::parse_algebra(a);
    if (id.affine) throw std::invalid_argument(a + ": scan takes finite algebras only");
    types.push_back(id);
  }
  auto cache = open_cache(g);
  auto reports = rt::scan_all(types, max_sum, *cache);
  emit_reports(g, reports, false);
  return verdict_exit(reports);
}

int cmd_naive_scan(const Globals& g, const std::string& alg, int m, int n) {
  auto rs = algebra_arg(alg, false);
  auto cache = open_cache(g);
  auto ws = rt::naive_condition_scan(rs, m, n, *cache);
  emit_weight_list(g, "naive-scan", rs.id(), ws, {{"m", m}, {"n", n}});
  return kOk;
}

int cmd_schur_compare(const Globals& g, const std::string& alg, const std::vector<std::string>& ws) {
  auto rs = algebra_arg(alg, false);
  auto cache = open_cache(g);
  auto a = rt::klimyk(rs, dominant_arg(rs, ws[0]), dominant_arg(rs, ws[1]), *cache);
  auto b = rt::klimyk(rs, dominant_arg(rs, ws[2]), dominant_arg(rs, ws[3]), *cache);
  auto report = rt::schur_compare(a, b);
  switch (output_format(g)) {
    case rt::OutputFormat::Json: {
      rt::Json wit = rt::Json::array();
      for (const auto& w : report.witnesses)
        wit.push_back({{"weight", rt::weight_to_json(w.weight)}, {"mult_a", w.mult_a.str()}, {"mult_b", w.mult_b.str()}});
      rt::write_json(std::cout, {{"algebra", rs.id().str()},
                                 {"a", {rt::weight_to_json(a.lhs), rt::weight_to_json(a.rhs)}},
                                 {"b", {rt::weight_to_json(b.lhs), rt::weight_to_json(b.rhs)}},
                                 {"dominates", report.dominates},
                                 {"witnesses", wit},
                                 {"meta", rt::meta("schur-compare")}});
      break;
    }
    case rt::OutputFormat::Csv:
      std::cout << rt::coordinate_header(rs.rank()) << ",mult_a,mult_b\n";
      for (const auto& w : report.witnesses) std::cout << w.weight.str() << "," << w.mult_a << "," << w.mult_b << "\n";
      break;
    case rt::OutputFormat::Table:
      std::cout << "V" << b.lhs.tuple() << " ⊗ V" << b.rhs.tuple() << (report.dominates ? " dominates " : " does not dominate ")
                << "V" << a.lhs.tuple() << " ⊗ V" << a.rhs.tuple() << "\n";
      for (const auto& w : report.witnesses)
        std::cout << "  " << w.weight.tuple() << ": " << w.mult_a << " > " << w.mult_b << "\n";
      break;
  }
  return report.dominates ? kOk : kNegative;
}

int cmd_support_contain(const Globals& g, const std::string& alg, int m, int n) {
  auto rs = algebra_arg(alg, false);
  auto cache = open_cache(g);
  auto report = rt::support_containment_check(rs, m, n, *cache);
  switch (output_format(g)) {
    case rt::OutputFormat::Json:
      rt::write_json(std::cout, {{"algebra", rs.id().str()},
                                 {"m", m},
                                 {"n", n},
                                 {"holds", report.holds},
                                 {"witnesses", rt::weights_to_json(report.witnesses)},
                                 {"schur_dominates", report.schur.dominates},
                                 {"meta", rt::meta("support-contain")}});
      break;
    case rt::OutputFormat::Csv:
      std::cout << rt::coordinate_header(rs.rank()) << "\n";
      for (const auto& w : report.witnesses) std::cout << w.str() << "\n";
      break;
    case rt::OutputFormat::Table:
      std::cout << "supp V(" << m << "ρ) ⊗ V(" << n << "ρ) ⊆ supp V(" << m - 1 << "ρ) ⊗ V(" << n + 1
                << "ρ): " << (report.holds ? "holds" : "fails") << "\n";
      std::cout << "multiplicity dominance: " << (report.schur.dominates ? "yes" : "no") << "\n";
      if (!report.witnesses.empty()) std::cout << "  witnesses: " << rt::join_weights(report.witnesses) << "\n";
      break;
  }
  return report.holds ? kOk : kNegative;
}

int cmd_saturate(const Globals& g, const std::string& alg, const std::vector<std::string>& args, int d) {
  auto rs = algebra_arg(alg, false);
  auto cache = open_cache(g);
  if (args.size() == 3) {
    auto lam = dominant_arg(rs, args[0]), mu = dominant_arg(rs, args[1]), nu = dominant_arg(rs, args[2]);
    bool ok = rt::saturation_check(rs, lam, mu, nu, d, *cache);
    if (output_format(g) == rt::OutputFormat::Json) {
      rt::write_json(std::cout, {{"algebra", rs.id().str()},
                                 {"lam", rt::weight_to_json(lam)},
                                 {"mu", rt::weight_to_json(mu)},
                                 {"nu", rt::weight_to_json(nu)},
                                 {"d", d},
                                 {"contained", ok},
                                 {"meta", rt::meta("saturate")}});
    } else {
      std::cout << "V(" << d << "·" << nu.tuple() << ") ⊆ V(" << d << "·" << lam.tuple() << ") ⊗ V(" << d << "·" << mu.tuple()
                << "): " << (ok ? "yes" : "no") << "\n";
    }
    return ok ? kOk : kNegative;
  }
  if (args.size() != 2) throw CLI::ValidationError("saturate", "expects M N or LAM MU NU");
  const int m = std::stoi(args[0]), n = std::stoi(args[1]);
  auto report = rt::saturation_scan(rs, m, n, d, *cache);
  switch (output_format(g)) {
    case rt::OutputFormat::Json:
      rt::write_json(std::cout, {{"algebra", rs.id().str()},
                                 {"m", m},
                                 {"n", n},
                                 {"d", d},
                                 {"checked", rt::weights_to_json(report.checked)},
                                 {"failures", rt::weights_to_json(report.failures)},
                                 {"meta", rt::meta("saturation-scan")}});
      break;
    case rt::OutputFormat::Csv:
      std::cout << rt::coordinate_header(rs.rank()) << ",contained\n";
      for (const auto& w : report.checked)
        std::cout << w.str() << "," << (std::binary_search(report.failures.begin(), report.failures.end(), w) ? 0 : 1) << "\n";
      break;
    case rt::OutputFormat::Table:
      std::cout << "d=" << d << ": " << report.checked.size() - report.failures.size() << " of " << report.checked.size()
                << " predicted triples saturate\n";
      if (!report.failures.empty()) std::cout << "  failures: " << rt::join_weights(report.failures) << "\n";
      break;
  }
  return report.failures.empty() ? kOk : kNegative;
}

int cmd_affine_decompose(const Globals& g, const std::string& alg, const std::string& lhs, const std::string& rhs, int depth) {
  auto rs = algebra_arg(alg, true);
  auto dec = rt::truncated_tensor(rs, dominant_arg(rs, lhs), dominant_arg(rs, rhs), depth);
  switch (output_format(g)) {
    case rt::OutputFormat::Json: rt::write_json(std::cout, rt::to_json(rs, dec)); break;
    case rt::OutputFormat::Csv: std::cout << rt::affine_decomposition_csv(rs, dec); break;
    case rt::OutputFormat::Table: std::cout << rt::affine_decomposition_table(rs, dec); break;
  }
  return kOk;
}

int cmd_delta_max(const Globals& g, const std::string& alg, const std::string& highest, int depth) {
  auto rs = algebra_arg(alg, true);
  auto lam = dominant_arg(rs, highest);
  auto ch = rt::affine_freudenthal(rs, lam, depth);
  const int lvl = rt::level(rs, lam);
  auto weights = rt::delta_max_weights(ch);
  switch (output_format(g)) {
    case rt::OutputFormat::Json: {
      rt::Json arr = rt::Json::array();
      for (const auto& dw : weights)
        arr.push_back({{"weight", rt::weight_to_json(rt::make_affine(rs, dw.finite, lvl, 0))}, {"depth", dw.depth}});
      rt::write_json(std::cout, {{"algebra", rs.id().str()},
                                 {"highest", rt::weight_to_json(lam)},
                                 {"depth", depth},
                                 {"delta_maximal", arr},
                                 {"meta", rt::meta("delta-max")}});
      break;
    }
    case rt::OutputFormat::Csv:
      std::cout << rt::coordinate_header(rs.rank() + 1, 0) << ",depth\n";
      for (const auto& dw : weights) std::cout << rt::make_affine(rs, dw.finite, lvl, 0).str() << "," << dw.depth << "\n";
      break;
    case rt::OutputFormat::Table:
      for (const auto& dw : weights)
        std::cout << rt::make_affine(rs, dw.finite, lvl, 0).tuple() << " - " << dw.depth << "δ\n";
      std::cout << weights.size() << " δ-maximal weights within depth " << depth << "\n";
      break;
  }
  return kOk;
}

int cmd_gko(const Globals& g, const std::string& alg, int m, int n, const std::optional<std::string>& lambda, int depth) {
  auto rs = algebra_arg(alg, true);
  if (m < n || n < 0) throw std::invalid_argument("gko: requires m >= n >= 0");
  const int h = rs.dual_coxeter();
  const rt::Rational c = rt::gko_central_charge(rs, m * h, n * h);

  struct Row {
    rt::Weight lambda;
    rt::Rational scalar;
    std::optional<rt::GkoReport> cert;
  };
  std::vector<Row> rows;
  bool positive = true;
  if (n >= 1) {
    const rt::Weight m_rho = rt::affine_rho_multiple(rs, m), n_rho = rt::affine_rho_multiple(rs, n);
    std::vector<rt::Weight> lams;
    int char_depth = depth;
    if (lambda) {
      rt::Weight lam = dominant_arg(rs, *lambda);
      if (rt::level(rs, lam) != (m + n) * h) throw std::invalid_argument("gko: --lambda must have level (m+n) h");
      char_depth = std::max(0, -(lam - m_rho).delta());
      lams.push_back(lam);
    } else {
      for (const auto& dw : rt::affine_predicted_weights(rs, m, n, depth))
        lams.push_back(rt::make_affine(rs, dw.finite, (m + n) * h, -dw.depth));
    }
    auto n_char = rt::affine_freudenthal(rs, n_rho, char_depth);
    for (const auto& lam : lams) {
      Row row{lam, rt::gko_l0_scalar(rs, m_rho, n_rho, lam), std::nullopt};
      if (row.scalar <= 0) {
        positive = false;
      } else {
        row.cert = rt::gko_positivity_certificate(rs, m, n, lam - m_rho, n_char);
      }
      rows.push_back(std::move(row));
    }
  }

  switch (output_format(g)) {
    case rt::OutputFormat::Json: {
      rt::Json arr = rt::Json::array();
      for (const auto& r : rows) {
        rt::Json e{{"lambda", rt::weight_to_json(r.lambda)}, {"l0_scalar", rt::to_string(r.scalar)}};
        if (r.cert) e["certificate"] = rt::to_json(*r.cert);
        arr.push_back(e);
      }
      rt::write_json(std::cout, {{"algebra", rs.id().str()},
                                 {"m", m},
                                 {"n", n},
                                 {"central_charge", rt::to_string(c)},
                                 {"components", arr},
                                 {"meta", rt::meta("gko")}});
      break;
    }
    case rt::OutputFormat::Csv:
      std::cout << "lambda,l0_scalar,t1,t2,t3,t4,D\n";
      for (const auto& r : rows) {
        std::cout << '"' << r.lambda.str() << "\"," << rt::to_string(r.scalar);
        if (r.cert) {
          for (const auto& t : r.cert->certificate_terms) std::cout << "," << rt::to_string(t);
          std::cout << "," << rt::to_string(r.cert->denominator);
        } else {
          std::cout << ",,,,,";
        }
        std::cout << "\n";
      }
      break;
    case rt::OutputFormat::Table:
      std::cout << "central charge " << rt::to_string(c) << "\n";
      for (const auto& r : rows) {
        std::cout << r.lambda.tuple() << "  L0 " << rt::to_string(r.scalar);
        if (r.cert) {
          std::cout << "  terms";
          for (const auto& t : r.cert->certificate_terms) std::cout << " " << rt::to_string(t);
          std::cout << "  / " << rt::to_string(r.cert->denominator) << "  " << rt::to_string(rt::delta_string_classify(r.scalar));
        } else {
          std::cout << "  NON-POSITIVE: contradicts the positivity lemma (bug or counterexample)";
        }
        std::cout << "\n";
      }
      break;
  }
  return positive ? kOk : kNegative;
}

int cmd_cache_stat(const Globals& g) {
  if (g.no_cache) throw std::invalid_argument("cache stat: --no-cache leaves nothing to inspect");
  rt::CharacterCache cache(rt::CharacterCache::default_directory());
  cache.ensure_writable();
  auto files = cache.stat();
  std::uintmax_t total = 0;
  for (const auto& f : files) total += f.bytes;
  switch (output_format(g)) {
    case rt::OutputFormat::Json: {
      rt::Json arr = rt::Json::array();
      for (const auto& f : files) arr.push_back({{"name", f.name}, {"bytes", f.bytes}});
      rt::write_json(std::cout, {{"directory", cache.directory()->string()}, {"entries", arr}, {"meta", rt::meta("cache")}});
      break;
    }
    case rt::OutputFormat::Csv:
      std::cout << "name,bytes\n";
      for (const auto& f : files) std::cout << f.name << "," << f.bytes << "\n";
      break;
    case rt::OutputFormat::Table:
      std::cout << "cache " << cache.directory()->string() << "\n";
      for (const auto& f : files) std::cout << "  " << f.name << "  " << f.bytes << " bytes\n";
      std::cout << files.size() << " entries, " << total << " bytes\n";
      break;
  }
  return kOk;
}

int cmd_cache_clear(const Globals&) {
  rt::CharacterCache cache(rt::CharacterCache::default_directory());
  cache.ensure_writable();
  std::cout << "removed " << cache.clear() << " entries from " << cache.directory()->string() << "\n";
  return kOk;
}

int cmd_cache_warm(const Globals&, const std::string& alg, const std::string& up_to) {
  auto rs = algebra_arg(alg, false);
  rt::Weight bound = dominant_arg(rs, up_to);
  rt::CharacterCache cache(rt::CharacterCache::default_directory());
  cache.ensure_writable();
  // Every dominant weight in the box 0 <= w <= bound, coordinatewise.
  rt::Weight w(bound.size());
  std::size_t count = 0;
  while (true) {
    cache.character(rs, w);
    ++count;
    std::size_t i = 0;
    while (i < w.size() && w[i] == bound[i]) w[i++] = 0;
    if (i == w.size()) break;
    ++w[i];
  }
  std::cout << "warmed " << count << " characters of " << rs.id().str() << " in " << cache.directory()->string() << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tensor-product decompositions and rho-translate conjecture checks", "rho-tensor"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"table", "json", "csv"}));
  app.add_flag("--no-cache", g.no_cache, "Do not read or write the on-disk character cache");

  std::function<int()> run;
  std::string alg, lhs, rhs, highest;
  int m = 0, n = 0, depth = 6, max_sum = 6, d = 1;
  bool oracle = false;
  std::vector<std::string> list;
  std::optional<std::string> lambda;

  auto* dec = app.add_subcommand("decompose", "Decompose V(lhs) ⊗ V(rhs)");
  dec->add_option("algebra", alg)->required();
  dec->add_option("lhs", lhs)->required();
  dec->add_option("rhs", rhs)->required();
  dec->add_flag("--oracle", oracle, "Use the brute-force character product instead of Klimyk's formula");
  dec->callback([&] { run = [&] { return cmd_decompose(g, alg, lhs, rhs, oracle); }; });

  auto* wts = app.add_subcommand("weights", "Dominant weight multiplicities of V(highest)");
  wts->add_option("algebra", alg)->required();
  wts->add_option("highest", highest)->required();
  wts->add_option("--depth", depth, "Delta-depth truncation (affine)")->check(CLI::NonNegativeNumber);
  wts->callback([&] { run = [&] { return cmd_weights(g, alg, highest, depth); }; });

  auto* conj = app.add_subcommand("conjecture", "Check that every predicted m rho + beta is a component");
  conj->add_option("algebra", alg)->required();
  conj->add_option("m", m)->required()->check(CLI::NonNegativeNumber);
  conj->add_option("n", n)->required()->check(CLI::NonNegativeNumber);
  conj->add_option("--depth", depth, "Delta-depth truncation (affine)")->check(CLI::NonNegativeNumber);
  conj->callback([&] { run = [&] { return cmd_conjecture(g, alg, m, n, depth); }; });

  auto* scan = app.add_subcommand("scan", "Run the conjecture check for all m >= n >= 0 with m + n <= max-sum");
  scan->add_option("algebras", list)->required();
  scan->add_option("--max-sum", max_sum)->check(CLI::NonNegativeNumber);
  scan->callback([&] { run = [&] { return cmd_scan(g, list, max_sum); }; });

  auto* naive = app.add_subcommand("naive-scan", "Dominant weights below (m+n) rho that are not components");
  naive->add_option("algebra", alg)->required();
  naive->add_option("m", m)->required()->check(CLI::NonNegativeNumber);
  naive->add_option("n", n)->required()->check(CLI::NonNegativeNumber);
  naive->callback([&] { run = [&] { return cmd_naive_scan(g, alg, m, n); }; });

  auto* schur = app.add_subcommand("schur-compare", "Does V(c) ⊗ V(d) contain V(a) ⊗ V(b) multiplicity-wise?");
  schur->add_option("algebra", alg)->required();
  schur->add_option("weights", list, "a b c d")->required()->expected(4);
  schur->callback([&] { run = [&] { return cmd_schur_compare(g, alg, list); }; });

  auto* sc = app.add_subcommand("support-contain", "Compare supports of (m rho, n rho) and ((m-1) rho, (n+1) rho)");
  sc->add_option("algebra", alg)->required();
  sc->add_option("m", m)->required()->check(CLI::NonNegativeNumber);
  sc->add_option("n", n)->required()->check(CLI::NonNegativeNumber);
  sc->callback([&] { run = [&] { return cmd_support_contain(g, alg, m, n); }; });

  auto* sat = app.add_subcommand("saturate", "V(d nu) ⊆ V(d lam) ⊗ V(d mu) for one triple (LAM MU NU) or all predicted (M N)");
  sat->add_option("algebra", alg)->required();
  sat->add_option("args", list, "M N or LAM MU NU")->required()->expected(2, 3);
  sat->add_option("--d", d, "Saturation factor")->check(CLI::PositiveNumber);
  sat->callback([&] { run = [&] { return cmd_saturate(g, alg, list, d); }; });

  auto* adec = app.add_subcommand("affine-decompose", "Truncated decomposition of V(lhs) ⊗ V(rhs) for an affine algebra");
  adec->add_option("algebra", alg)->required();
  adec->add_option("lhs", lhs)->required();
  adec->add_option("rhs", rhs)->required();
  adec->add_option("--depth", depth)->check(CLI::NonNegativeNumber);
  adec->callback([&] { run = [&] { return cmd_affine_decompose(g, alg, lhs, rhs, depth); }; });

  auto* dmax = app.add_subcommand("delta-max", "Delta-maximal dominant weights of V(highest)");
  dmax->add_option("algebra", alg)->required();
  dmax->add_option("highest", highest)->required();
  dmax->add_option("--depth", depth)->check(CLI::NonNegativeNumber);
  dmax->callback([&] { run = [&] { return cmd_delta_max(g, alg, highest, depth); }; });

  auto* gko = app.add_subcommand("gko", "Coset Virasoro central charge and L0 scalars on V(m rho) ⊗ V(n rho)");
  gko->add_option("algebra", alg)->required();
  gko->add_option("m", m)->required()->check(CLI::NonNegativeNumber);
  gko->add_option("n", n)->required()->check(CLI::NonNegativeNumber);
  gko->add_option("--lambda", lambda, "A single component weight (r+1 coordinates, optional :dN)");
  gko->add_option("--depth", depth)->check(CLI::NonNegativeNumber);
  gko->callback([&] { run = [&] { return cmd_gko(g, alg, m, n, lambda, depth); }; });

  auto* cache = app.add_subcommand("cache", "Inspect or manage the character cache ($RHO_TENSOR_CACHE)");
  cache->require_subcommand(1);
  auto* cstat = cache->add_subcommand("stat", "List cached characters");
  cstat->callback([&] { run = [&] { return cmd_cache_stat(g); }; });
  auto* cclear = cache->add_subcommand("clear", "Remove every cached character");
  cclear->callback([&] { run = [&] { return cmd_cache_clear(g); }; });
  auto* cwarm = cache->add_subcommand("warm", "Precompute characters V(w) for 0 <= w <= bound");
  std::string up_to;
  cwarm->add_option("algebra", alg)->required();
  cwarm->add_option("--up-to", up_to)->required();
  cwarm->callback([&] { run = [&] { return cmd_cache_warm(g, alg, up_to); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    return run();
  } catch (const rt::InvariantError& e) {
    std::cerr << "internal invariant failure: " << e.what() << "\n";
    return kInternal;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
