#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "cyclemetrics/graph.hpp"

namespace cyclemetrics {

/// Boundary walk of one face, as edge ids of the base graph.
struct Face {
  std::vector<EdgeId> edges;
  bool outer = false;
};

/// A connected graph together with an explicit embedding given by its faces.
/// Faces are supplied by the caller; nothing here computes an embedding.
struct PlaneGraph {
  Graph base;
  std::vector<Face> faces;
};

struct PlaneValidation {
  bool ok = true;
  std::string message;  // first violation found, empty when ok

  explicit operator bool() const noexcept { return ok; }
};

/// Checks connectivity, Euler's formula, that each edge bounds faces exactly
/// twice (both times in one face iff it is a bridge), that consecutive
/// boundary edges share a vertex and that exactly one face is outer.
PlaneValidation validate_plane(const PlaneGraph& pg);

/// {"vertices":[...], "edges":[[u,v],...], "faces":[{"edges":[ids...],"outer":bool},...]}
PlaneGraph plane_graph_from_json(const nlohmann::json& doc);
nlohmann::json plane_graph_to_json(const PlaneGraph& pg);

}  // namespace cyclemetrics
