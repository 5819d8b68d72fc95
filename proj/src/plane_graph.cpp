#include "cyclemetrics/plane_graph.hpp"

#include <algorithm>

#include "cyclemetrics/errors.hpp"
#include "cyclemetrics/graph_io.hpp"

namespace cyclemetrics {

namespace {

bool share_vertex(const Edge& a, const Edge& b) {
  return a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
}

PlaneValidation fail(std::string message) { return {false, std::move(message)}; }

}  // namespace

PlaneValidation validate_plane(const PlaneGraph& pg) {
  const Graph& g = pg.base;
  const long long n = static_cast<long long>(g.vertex_count());
  const long long m = static_cast<long long>(g.edge_count());
  const long long f = static_cast<long long>(pg.faces.size());

  if (n == 0) return fail("plane graph has no vertices");
  if (!is_connected(g)) return fail("base graph is disconnected");
  if (n - m + f != 2) {
    return fail("Euler's formula fails: n - m + f = " + std::to_string(n) + " - " + std::to_string(m) + " + " +
                std::to_string(f) + " = " + std::to_string(n - m + f));
  }
  auto outer = std::count_if(pg.faces.begin(), pg.faces.end(), [](const Face& fc) { return fc.outer; });
  if (outer != 1) return fail("expected exactly one outer face, found " + std::to_string(outer));

  // Occurrence count per edge, and the face of each occurrence.
  std::vector<std::vector<std::size_t>> seen_in(g.edge_count());
  for (std::size_t fi = 0; fi < pg.faces.size(); ++fi) {
    const auto& walk = pg.faces[fi].edges;
    if (walk.empty() && m > 0) return fail("face " + std::to_string(fi) + " has an empty boundary");
    for (std::size_t i = 0; i < walk.size(); ++i) {
      EdgeId id = walk[i];
      if (id >= g.edge_count()) {
        return fail("face " + std::to_string(fi) + " references unknown edge " + std::to_string(id));
      }
      seen_in[id].push_back(fi);
      const Edge& next = g.edge(walk[(i + 1) % walk.size()]);
      if (walk.size() > 1 && !share_vertex(g.edge(id), next)) {
        return fail("face " + std::to_string(fi) + " boundary is not a closed walk at position " +
                    std::to_string(i));
      }
    }
  }
  auto is_bridge = std::vector<bool>(g.edge_count(), false);
  for (EdgeId b : bridges(g)) is_bridge[b] = true;
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    if (seen_in[id].size() != 2) {
      return fail("edge " + std::to_string(id) + " appears " + std::to_string(seen_in[id].size()) +
                  " times on face boundaries, expected 2");
    }
    bool same_face = seen_in[id][0] == seen_in[id][1];
    if (same_face != is_bridge[id]) {
      return fail("edge " + std::to_string(id) + (is_bridge[id] ? " is a bridge but borders two faces"
                                                                 : " borders only one face but is not a bridge"));
    }
  }
  return {};
}

PlaneGraph plane_graph_from_json(const nlohmann::json& doc) {
  PlaneGraph pg{graph_from_json(doc), {}};
  if (!doc.contains("faces") || !doc["faces"].is_array()) throw InputError("plane graph JSON needs a \"faces\" array");
  for (const auto& face : doc["faces"]) {
    if (!face.is_object() || !face.contains("edges") || !face["edges"].is_array()) {
      throw InputError("each face must be an object with an \"edges\" array");
    }
    Face fc;
    for (const auto& id : face["edges"]) {
      if (!id.is_number_unsigned()) throw InputError("face edge ids must be non-negative integers");
      fc.edges.push_back(id.get<EdgeId>());
    }
    fc.outer = face.value("outer", false);
    pg.faces.push_back(std::move(fc));
  }
  return pg;
}

nlohmann::json plane_graph_to_json(const PlaneGraph& pg) {
  auto doc = graph_to_json(pg.base);
  auto faces = nlohmann::json::array();
  for (const Face& fc : pg.faces) faces.push_back({{"edges", fc.edges}, {"outer", fc.outer}});
  doc["faces"] = std::move(faces);
  return doc;
}

}  // namespace cyclemetrics
