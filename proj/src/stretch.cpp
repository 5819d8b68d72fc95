#include "cyclemetrics/stretch.hpp"

#include <algorithm>
#include <limits>

#include "cyclemetrics/errors.hpp"

namespace cyclemetrics {

int stretch_of(const Graph& g, std::span<const Edge> h_edges) {
  std::vector<bool> allowed(g.edge_count(), false);
  for (const Edge& e : h_edges) {
    auto id = g.edge_id(e.u, e.v);
    if (!id) throw InputError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} is not in the graph");
    allowed[*id] = true;
  }
  int worst = 0;
  // One BFS per vertex that starts some graph edge.
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    auto nbrs = g.neighbors(u);
    if (std::none_of(nbrs.begin(), nbrs.end(), [u](Vertex w) { return w > u; })) continue;
    auto dist = bfs_distances_filtered(g, u, allowed);
    for (Vertex w : nbrs) {
      if (w < u) continue;
      if (dist[w] == kUnreachable) throw InputError("subgraph is not connected");
      worst = std::max(worst, dist[w]);
    }
  }
  if (g.vertex_count() > 0) {
    auto dist = bfs_distances_filtered(g, 0, allowed);
    if (std::any_of(dist.begin(), dist.end(), [](int d) { return d == kUnreachable; })) {
      throw InputError("subgraph is not connected");
    }
  }
  return worst;
}

int stretch_of(const Graph& g, const SpanningTree& t) {
  int worst = 0;
  for (const Edge& e : g.edges()) worst = std::max(worst, t.distance(e.u, e.v));
  return worst;
}

EdgeCongestion edge_congestion(const Graph& g, const SpanningTree& t) {
  if (t.vertex_count() != g.vertex_count()) throw InputError("tree does not span the graph");
  for (const Edge& e : t.edges()) {
    if (!g.has_edge(e.u, e.v)) throw InputError("tree edge is not a graph edge");
  }
  // load[v] counts graph edges crossing the tree edge v - parent(v).
  std::vector<int> load(g.vertex_count(), 0);
  for (const Edge& e : g.edges()) {
    Vertex a = e.u, b = e.v;
    while (a != b) {
      if (t.depth(a) < t.depth(b)) std::swap(a, b);
      ++load[a];
      a = *t.parent(a);
    }
  }
  EdgeCongestion out;
  for (const Edge& e : t.edges()) {
    Vertex child = (t.parent(e.v) && *t.parent(e.v) == e.u) ? e.v : e.u;
    if (load[child] > out.value) {
      out.value = load[child];
      out.witness_edge = e;
    }
  }
  return out;
}

StretchResult stretch_oracle(const Graph& g, std::uint64_t tree_cap) {
  std::optional<StretchResult> best;
  for_each_spanning_tree(g, tree_cap, [&](const SpanningTree& t) {
    int s = stretch_of(g, t);
    if (!best || s < best->value) best = StretchResult{s, t, std::nullopt};
  });
  for (const Edge& e : g.edges()) {
    if (best->witness_tree.distance(e.u, e.v) == best->value) {
      best->witness_edge = e;
      break;
    }
  }
  return std::move(*best);
}

CongestionResult congestion_oracle(const Graph& g, std::uint64_t tree_cap) {
  std::optional<CongestionResult> best;
  for_each_spanning_tree(g, tree_cap, [&](const SpanningTree& t) {
    auto ec = edge_congestion(g, t);
    if (!best || ec.value < best->value) best = CongestionResult{ec.value, t, ec.witness_edge};
  });
  return std::move(*best);
}

}  // namespace cyclemetrics
