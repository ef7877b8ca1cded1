#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "spintaut/taut.hpp"

namespace spintaut {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "spintaut-output v1";

/// Graph JSON. Half-edges are numbered legs first (in listed order), then the
/// two halves of each listed edge; `twist`, when given, is indexed by the
/// graph's own half-edges.
Json graph_to_json(const StableGraph& g, const std::vector<int>* twist = nullptr);
StableGraph graph_from_json(const Json& j);

/// TautClass JSON: a list of {graph, decoration, coeff}. ψ entries refer to
/// the JSON half-edge numbering of the accompanying graph.
Json class_to_json(const TautClass& x);
TautClass class_from_json(const Json& j, const Ambient& ambient);

/// {"schema", "g", "n", "class"} wrapper and its inverse.
Json class_document(int g, int n, const TautClass& x);
TautClass class_from_document(const Json& doc);

/// One aligned line per term.
std::string class_to_text(const TautClass& x);

}  // namespace spintaut
