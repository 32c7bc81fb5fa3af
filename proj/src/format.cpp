#include "rhotensor/format.hpp"

#include <sstream>

namespace rhotensor {

OutputFormat parse_format(const std::string& s) {
  if (s == "table") return OutputFormat::Table;
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  throw std::invalid_argument("unknown format '" + s + "' (expected table, json or csv)");
}

Json meta(const std::string& kind) { return Json{{"schema", kSchemaVersion}, {"kind", kind}}; }

Json weight_to_json(const Weight& w) {
  Json coords = Json::array();
  for (int c : w) coords.push_back(c);
  if (w.delta() == 0) return coords;
  return Json{{"weight", coords}, {"delta", w.delta()}};
}

Weight weight_from_json(const Json& j) {
  const Json& coords = j.is_object() ? j.at("weight") : j;
  if (!coords.is_array()) throw std::invalid_argument("weight must be an integer array");
  Weight w(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) w[i] = coords[i].get<int>();
  return j.is_object() ? w.with_delta(j.value("delta", 0)) : w;
}

Json weights_to_json(const std::vector<Weight>& ws) {
  Json out = Json::array();
  for (const auto& w : ws) out.push_back(weight_to_json(w));
  return out;
}

std::vector<Weight> weights_from_json(const Json& j) {
  std::vector<Weight> out;
  for (const auto& e : j) out.push_back(weight_from_json(e));
  return out;
}

Json to_json(const Decomposition& d) {
  Json comps = Json::array();
  for (const auto& [nu, m] : d.components) comps.push_back(Json{{"weight", weight_to_json(nu)}, {"mult", m.str()}});
  return Json{{"algebra", d.algebra.str()},
              {"lhs", weight_to_json(d.lhs)},
              {"rhs", weight_to_json(d.rhs)},
              {"components", comps},
              {"meta", meta("decomposition")}};
}

Decomposition decomposition_from_json(const Json& j) {
  Decomposition d{parse_algebra(j.at("algebra").get<std::string>()), weight_from_json(j.at("lhs")),
                  weight_from_json(j.at("rhs")), {}};
  for (const auto& c : j.at("components"))
    d.components.emplace(weight_from_json(c.at("weight")), parse_integer(c.at("mult").get<std::string>()));
  return d;
}

std::string decomposition_table(const Decomposition& d) {
  std::string out;
  for (const auto& [nu, m] : d.components) out += m.str() + " × " + nu.tuple() + "\n";
  return out;
}

std::string coordinate_header(std::size_t n, std::size_t first) {
  std::string out;
  for (std::size_t i = 0; i < n; ++i) out += (i ? "," : "") + std::string("c") + std::to_string(first + i);
  return out;
}

std::string decomposition_csv(const Decomposition& d) {
  std::string out = coordinate_header(d.lhs.size()) + ",mult\n";
  for (const auto& [nu, m] : d.components) out += nu.str() + "," + m.str() + "\n";
  return out;
}

Json to_json(const AlgebraId& algebra, const DominantCharacter& ch) {
  Json entries = Json::array();
  for (const auto& [mu, m] : ch.mults) entries.push_back(Json{{"weight", weight_to_json(mu)}, {"mult", m.str()}});
  return Json{{"algebra", algebra.str()}, {"highest", weight_to_json(ch.highest)}, {"weights", entries}, {"meta", meta("character")}};
}

DominantCharacter character_from_json(const Json& j) {
  DominantCharacter ch{weight_from_json(j.at("highest")), {}};
  for (const auto& e : j.at("weights"))
    ch.mults.emplace(weight_from_json(e.at("weight")), parse_integer(e.at("mult").get<std::string>()));
  return ch;
}

std::string character_table(const RootSystem& rs, const DominantCharacter& ch) {
  std::ostringstream os;
  os << "V" << ch.highest.tuple() << " of " << rs.id().str() << ", dim " << weyl_dimension(rs, ch.highest) << "\n";
  for (auto it = ch.mults.rbegin(); it != ch.mults.rend(); ++it)
    os << it->first.tuple() << "  mult " << it->second << "  orbit " << orbit(rs, it->first).size() << "\n";
  return os.str();
}

std::string character_csv(const DominantCharacter& ch) {
  std::string out = coordinate_header(ch.highest.size()) + ",mult\n";
  for (const auto& [mu, m] : ch.mults) out += mu.str() + "," + m.str() + "\n";
  return out;
}

Json to_json(const ConjectureReport& r) {
  Json j{{"algebra", r.algebra.str()}, {"m", r.m}, {"n", r.n}};
  if (r.depth) j["depth"] = *r.depth;
  j["verdict"] = to_string(r.verdict);
  j["predicted"] = weights_to_json(r.predicted);
  j["present"] = weights_to_json(r.present);
  j["missing"] = weights_to_json(r.missing);
  if (r.depth) j["open_cases"] = weights_to_json(r.open_cases);
  if (!r.error.empty()) j["error"] = r.error;
  j["meta"] = meta("conjecture");
  return j;
}

ConjectureReport report_from_json(const Json& j) {
  ConjectureReport r = make_report(parse_algebra(j.at("algebra").get<std::string>()), j.at("m").get<int>(), j.at("n").get<int>());
  if (j.contains("depth")) r.depth = j.at("depth").get<int>();
  r.verdict = parse_verdict(j.at("verdict").get<std::string>());
  r.predicted = weights_from_json(j.at("predicted"));
  r.present = weights_from_json(j.at("present"));
  r.missing = weights_from_json(j.at("missing"));
  if (j.contains("open_cases")) r.open_cases = weights_from_json(j.at("open_cases"));
  r.error = j.value("error", "");
  return r;
}

std::string join_weights(const std::vector<Weight>& ws, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < ws.size(); ++i) out += (i ? sep : "") + ws[i].tuple();
  return out;
}

std::string report_table(const ConjectureReport& r) {
  std::ostringstream os;
  os << r.algebra.str() << " m=" << r.m << " n=" << r.n;
  if (r.depth) os << " depth=" << *r.depth;
  os << "  " << to_string(r.verdict) << "\n";
  if (r.verdict == Verdict::Error) {
    os << "  error: " << r.error << "\n";
    return os.str();
  }
  os << "  predicted " << r.predicted.size() << ", present " << r.present.size() << ", missing " << r.missing.size() << "\n";
  if (!r.missing.empty()) os << "  missing: " << join_weights(r.missing) << "\n";
  if (!r.open_cases.empty()) os << "  non-dominant beta (reported, not asserted): " << join_weights(r.open_cases) << "\n";
  return os.str();
}

std::string reports_csv(const std::vector<ConjectureReport>& rs) {
  std::string out = "algebra,m,n,depth,verdict,predicted,present,missing\n";
  for (const auto& r : rs) {
    out += r.algebra.str() + "," + std::to_string(r.m) + "," + std::to_string(r.n) + "," +
           (r.depth ? std::to_string(*r.depth) : "") + "," + to_string(r.verdict) + "," +
           std::to_string(r.predicted.size()) + "," + std::to_string(r.present.size()) + "," +
           std::to_string(r.missing.size()) + "\n";
  }
  return out;
}

Json to_json(const RootSystem& rs, const AffineDecomposition& d) {
  Json comps = Json::array();
  const auto maximal = d.delta_maximal();
  for (const auto& [dw, m] : d.components) {
    comps.push_back(Json{{"weight", weight_to_json(d.affine_weight(rs, dw).with_delta(0))},
                         {"depth", dw.depth},
                         {"mult", m.str()},
                         {"delta_maximal", std::binary_search(maximal.begin(), maximal.end(), dw)}});
  }
  return Json{{"algebra", d.algebra.str()},
              {"lhs", weight_to_json(d.lhs)},
              {"rhs", weight_to_json(d.rhs)},
              {"depth", d.depth},
              {"components", comps},
              {"meta", meta("affine-decomposition")}};
}

AffineDecomposition affine_decomposition_from_json(const Json& j) {
  AffineDecomposition d{parse_algebra(j.at("algebra").get<std::string>()), weight_from_json(j.at("lhs")),
                        weight_from_json(j.at("rhs")), j.at("depth").get<int>(), {}};
  for (const auto& c : j.at("components")) {
    Weight full = weight_from_json(c.at("weight"));
    d.components.emplace(DepthWeight{finite_part(full), c.at("depth").get<int>()}, parse_integer(c.at("mult").get<std::string>()));
  }
  return d;
}

std::string affine_decomposition_table(const RootSystem& rs, const AffineDecomposition& d) {
  std::ostringstream os;
  const auto maximal = d.delta_maximal();
  for (const auto& [dw, m] : d.components) {
    os << m << " × " << d.affine_weight(rs, dw).with_delta(0).tuple() << " - " << dw.depth << "δ";
    if (std::binary_search(maximal.begin(), maximal.end(), dw)) os << "  [δ-maximal]";
    os << "\n";
  }
  return os.str();
}

std::string affine_decomposition_csv(const RootSystem& rs, const AffineDecomposition& d) {
  std::string out = coordinate_header(d.lhs.size(), 0) + ",depth,mult,delta_maximal\n";
  const auto maximal = d.delta_maximal();
  for (const auto& [dw, m] : d.components) {
    out += d.affine_weight(rs, dw).with_delta(0).str() + "," + std::to_string(dw.depth) + "," + m.str() + "," +
           (std::binary_search(maximal.begin(), maximal.end(), dw) ? "1" : "0") + "\n";
  }
  return out;
}

Json to_json(const GkoReport& g) {
  Json terms = Json::array();
  for (const auto& t : g.certificate_terms) terms.push_back(to_string(t));
  return Json{{"central_charge", to_string(g.central_charge)},
              {"l0_scalar", to_string(g.l0_scalar)},
              {"certificate_terms", terms},
              {"denominator", to_string(g.denominator)}};
}

void write_json(std::ostream& os, const Json& j) { os << j.dump(2) << "\n"; }

}  // namespace rhotensor
