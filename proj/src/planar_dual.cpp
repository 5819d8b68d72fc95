#include "cyclemetrics/planar_dual.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "cyclemetrics/disjoint_set.hpp"
#include "cyclemetrics/errors.hpp"
#include "cyclemetrics/stretch.hpp"

namespace cyclemetrics {

Graph MultiGraph::simplified() const {
  std::set<Edge> unique;
  for (const DualEdge& e : edges)
    if (!e.is_loop()) unique.emplace(e.a, e.b);
  return Graph(node_count, std::vector<Edge>(unique.begin(), unique.end()));
}

MultiGraph dual_graph(const PlaneGraph& pg) {
  if (auto v = validate_plane(pg); !v) throw InputError("invalid plane graph: " + v.message);
  MultiGraph dual;
  dual.node_count = pg.faces.size();
  std::vector<std::vector<std::uint32_t>> sides(pg.base.edge_count());
  for (std::uint32_t f = 0; f < pg.faces.size(); ++f)
    for (EdgeId id : pg.faces[f].edges) sides[id].push_back(f);
  for (EdgeId id = 0; id < sides.size(); ++id) dual.edges.push_back({sides[id][0], sides[id][1], id});
  return dual;
}

namespace {

void require_spans(const PlaneGraph& pg, const SpanningTree& t) {
  if (t.vertex_count() != pg.base.vertex_count()) throw InputError("tree does not span the plane graph");
  for (const Edge& e : t.edges())
    if (!pg.base.has_edge(e.u, e.v)) throw InputError("tree edge is not an edge of the plane graph");
}

}  // namespace

std::vector<DualEdge> dual_spanning_tree(const PlaneGraph& pg, const SpanningTree& t) {
  require_spans(pg, t);
  const MultiGraph dual = dual_graph(pg);
  std::vector<bool> in_tree(pg.base.edge_count(), false);
  for (const Edge& e : t.edges()) in_tree[*pg.base.edge_id(e.u, e.v)] = true;

  std::vector<DualEdge> out;
  DisjointSet dsu(dual.node_count);
  for (const DualEdge& e : dual.edges) {
    if (in_tree[e.source]) continue;
    if (e.is_loop() || !dsu.unite(e.a, e.b)) {
      throw std::logic_error("complement of a spanning tree is not a spanning tree of the dual");
    }
    out.push_back(e);
  }
  if (dsu.components() != 1) throw std::logic_error("dual tree does not span all faces");
  return out;
}

DualityCheck verify_duality_lemma(const PlaneGraph& pg, const SpanningTree& t) {
  const auto tree = dual_spanning_tree(pg, t);
  const MultiGraph dual = dual_graph(pg);

  std::vector<std::vector<std::uint32_t>> adj(dual.node_count);
  for (const DualEdge& e : tree) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  DualityCheck out;
  for (std::uint32_t s = 0; s < dual.node_count; ++s) {
    std::vector<int> d(dual.node_count, -1);
    std::deque<std::uint32_t> queue{s};
    d[s] = 0;
    while (!queue.empty()) {
      auto a = queue.front();
      queue.pop_front();
      for (auto b : adj[a])
        if (d[b] < 0) {
          d[b] = d[a] + 1;
          queue.push_back(b);
        }
    }
    for (const DualEdge& e : dual.edges)
      if (e.a == s) out.dual_stretch = std::max(out.dual_stretch, d[e.b]);
  }
  out.congestion = edge_congestion(pg.base, t).value;
  out.equal = out.congestion == out.dual_stretch + 1;
  return out;
}

GlobalDualityCheck verify_duality_global(const PlaneGraph& pg, std::uint64_t tree_cap) {
  const MultiGraph dual = dual_graph(pg);
  GlobalDualityCheck out;
  out.congestion = congestion_oracle(pg.base, tree_cap).value;
  out.dual_stretch = stretch_oracle(dual.simplified(), tree_cap).value;
  out.equal_plus_one = out.congestion == out.dual_stretch + 1;
  return out;
}

nlohmann::json dual_to_json(const MultiGraph& dual) {
  auto edges = nlohmann::json::array();
  for (const DualEdge& e : dual.edges) edges.push_back({e.a, e.b, e.source});
  return {{"nodes", dual.node_count}, {"edges", edges}};
}

}  // namespace cyclemetrics
