#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include <json.hpp>

#include "cyclemetrics/graph.hpp"

namespace cyclemetrics {

/// Edge-list text: one "u v" pair per line, names are arbitrary tokens given
/// ids in first-appearance order, '#' starts a comment line. A line holding a
/// single token declares a vertex (needed for isolated vertices and to pin ids).
Graph parse_edge_list(std::string_view text);

/// {"vertices":[names...], "edges":[[i,j],...]} with indices into "vertices".
/// "vertices" may also be a plain count.
Graph graph_from_json(const nlohmann::json& doc);
nlohmann::json graph_to_json(const Graph& g);

/// Dispatches on the first non-blank character: '{' means JSON.
Graph parse_graph(std::string_view text);

/// Writes an edge list that parses back to the same ids and labels.
std::string to_edge_list(const Graph& g);

}  // namespace cyclemetrics
