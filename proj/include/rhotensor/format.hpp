#pragma once

#include "rhotensor/harness.hpp"

#include <json.hpp>

#include <ostream>

namespace rhotensor {

using Json = nlohmann::ordered_json;

enum class OutputFormat { Table, Json, Csv };

OutputFormat parse_format(const std::string& s);

inline constexpr int kSchemaVersion = 1;

Json meta(const std::string& kind);

// Weights serialize as integer arrays; a nonzero delta coefficient turns the
// entry into {"weight": [...], "delta": d}.

Json weight_to_json(const Weight& w);
Weight weight_from_json(const Json& j);
Json weights_to_json(const std::vector<Weight>& ws);
std::vector<Weight> weights_from_json(const Json& j);

// ---------------------------------------------------------------------------
// Decomposition

Json to_json(const Decomposition& d);
Decomposition decomposition_from_json(const Json& j);
std::string decomposition_table(const Decomposition& d);
std::string coordinate_header(std::size_t n, std::size_t first = 1);
std::string decomposition_csv(const Decomposition& d);

// ---------------------------------------------------------------------------
// Dominant characters

Json to_json(const AlgebraId& algebra, const DominantCharacter& ch);
DominantCharacter character_from_json(const Json& j);
std::string character_table(const RootSystem& rs, const DominantCharacter& ch);
std::string character_csv(const DominantCharacter& ch);

// ---------------------------------------------------------------------------
// Conjecture reports

Json to_json(const ConjectureReport& r);
ConjectureReport report_from_json(const Json& j);
std::string join_weights(const std::vector<Weight>& ws, const char* sep = " ");
std::string report_table(const ConjectureReport& r);
std::string reports_csv(const std::vector<ConjectureReport>& rs);

// ---------------------------------------------------------------------------
// Affine decompositions

Json to_json(const RootSystem& rs, const AffineDecomposition& d);
AffineDecomposition affine_decomposition_from_json(const Json& j);
std::string affine_decomposition_table(const RootSystem& rs, const AffineDecomposition& d);
std::string affine_decomposition_csv(const RootSystem& rs, const AffineDecomposition& d);

// ---------------------------------------------------------------------------
// Rationals

Json to_json(const GkoReport& g);

/// Writes a JSON document with two-space indentation and a trailing newline.
void write_json(std::ostream& os, const Json& j);

}  // namespace rhotensor
