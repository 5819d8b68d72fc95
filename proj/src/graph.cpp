#include "cyclemetrics/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "cyclemetrics/errors.hpp"

namespace cyclemetrics {

Graph::Graph(std::size_t n, std::vector<Edge> edges, std::vector<std::string> labels)
    : edges_(std::move(edges)), adjacency_(n), incident_(n), labels_(std::move(labels)) {
  if (!labels_.empty() && labels_.size() != n) {
    throw InputError("label count " + std::to_string(labels_.size()) + " does not match vertex count " +
                     std::to_string(n));
  }
  for (EdgeId id = 0; id < edges_.size(); ++id) {
    const Edge e = edges_[id];
    if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u));
    if (e.v >= n) throw InputError("edge endpoint " + std::to_string(e.v) + " out of range");
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
    incident_[e.u].push_back(id);
    incident_[e.v].push_back(id);
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto& adj = adjacency_[v];
    auto& inc = incident_[v];
    std::vector<std::size_t> order(adj.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return adj[a] < adj[b]; });
    std::vector<Vertex> sorted_adj;
    std::vector<EdgeId> sorted_inc;
    sorted_adj.reserve(adj.size());
    sorted_inc.reserve(adj.size());
    for (std::size_t i : order) {
      if (!sorted_adj.empty() && sorted_adj.back() == adj[i]) {
        throw InputError("duplicate edge {" + std::to_string(v) + "," + std::to_string(adj[i]) + "}");
      }
      sorted_adj.push_back(adj[i]);
      sorted_inc.push_back(inc[i]);
    }
    adj = std::move(sorted_adj);
    inc = std::move(sorted_inc);
  }
}

bool Graph::has_edge(Vertex a, Vertex b) const { return edge_id(a, b).has_value(); }

std::optional<EdgeId> Graph::edge_id(Vertex a, Vertex b) const {
  if (a >= adjacency_.size() || b >= adjacency_.size()) return std::nullopt;
  const auto& adj = adjacency_[a];
  auto it = std::lower_bound(adj.begin(), adj.end(), b);
  if (it == adj.end() || *it != b) return std::nullopt;
  return incident_[a][static_cast<std::size_t>(it - adj.begin())];
}

std::string Graph::label(Vertex v) const {
  if (v >= adjacency_.size()) throw InputError("vertex " + std::to_string(v) + " out of range");
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

int BfsLayering::max_level() const {
  int best = 0;
  for (int l : level)
    if (l != kUnreachable) best = std::max(best, l);
  return best;
}

std::vector<Vertex> BfsLayering::path_to_root(Vertex v) const {
  std::vector<Vertex> path{v};
  while (parent.at(v)) {
    v = *parent[v];
    path.push_back(v);
  }
  return path;
}

int DistanceMatrix::diameter() const {
  int best = 0;
  for (int d : data_)
    if (d != kUnreachable) best = std::max(best, d);
  return best;
}

namespace {

std::vector<int> bfs_levels(const Graph& g, Vertex root, const std::vector<bool>* allowed) {
  std::vector<int> level(g.vertex_count(), kUnreachable);
  std::deque<Vertex> queue{root};
  level[root] = 0;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    auto nbrs = g.neighbors(u);
    for (Vertex w : nbrs) {
      if (level[w] != kUnreachable) continue;
      if (allowed && !(*allowed)[*g.edge_id(u, w)]) continue;
      level[w] = level[u] + 1;
      queue.push_back(w);
    }
  }
  return level;
}

}  // namespace

BfsLayering bfs(const Graph& g, Vertex root) {
  if (root >= g.vertex_count()) {
    throw InputError("bfs root " + std::to_string(root) + " out of range for " +
                     std::to_string(g.vertex_count()) + " vertices");
  }
  BfsLayering out;
  out.root = root;
  out.level = bfs_levels(g, root, nullptr);
  out.parent.assign(g.vertex_count(), std::nullopt);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (v == root || out.level[v] == kUnreachable) continue;
    for (Vertex w : g.neighbors(v)) {
      if (out.level[w] == out.level[v] - 1) {
        out.parent[v] = w;
        break;
      }
    }
  }
  return out;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  const std::size_t n = g.vertex_count();
  DistanceMatrix dist(n);
  for (Vertex s = 0; s < n; ++s) {
    auto row = bfs_levels(g, s, nullptr);
    for (Vertex t = 0; t < n; ++t) dist.at(s, t) = row[t];
  }
  return dist;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  auto level = bfs_levels(g, 0, nullptr);
  return std::none_of(level.begin(), level.end(), [](int l) { return l == kUnreachable; });
}

std::vector<int> bfs_distances_filtered(const Graph& g, Vertex source, const std::vector<bool>& allowed) {
  if (source >= g.vertex_count()) throw InputError("vertex " + std::to_string(source) + " out of range");
  return bfs_levels(g, source, &allowed);
}

std::optional<int> distance_in_subgraph(const Graph& g, std::span<const Edge> edge_subset, Vertex u,
                                        Vertex v) {
  if (u >= g.vertex_count() || v >= g.vertex_count()) throw InputError("vertex out of range");
  std::vector<bool> allowed(g.edge_count(), false);
  for (const Edge& e : edge_subset) {
    auto id = g.edge_id(e.u, e.v);
    if (!id) {
      throw InputError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} is not in the graph");
    }
    allowed[*id] = true;
  }
  int d = bfs_levels(g, u, &allowed)[v];
  if (d == kUnreachable) return std::nullopt;
  return d;
}

std::optional<std::vector<Vertex>> shortest_path_filtered(const Graph& g, Vertex from, Vertex to,
                                                          const std::vector<bool>& allowed) {
  auto dist = bfs_distances_filtered(g, from, allowed);
  if (dist.at(to) == kUnreachable) return std::nullopt;
  std::vector<Vertex> path{to};
  Vertex cur = to;
  while (cur != from) {
    for (Vertex w : g.neighbors(cur)) {
      if (dist[w] == dist[cur] - 1 && allowed[*g.edge_id(cur, w)]) {
        cur = w;
        break;
      }
    }
    path.push_back(cur);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<EdgeId> bridges(const Graph& g) {
  // Iterative Tarjan low-link.
  const std::size_t n = g.vertex_count();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<EdgeId> out;
  int timer = 0;
  struct Frame {
    Vertex v;
    std::optional<EdgeId> via;
    std::size_t next = 0;
  };
  for (Vertex s = 0; s < n; ++s) {
    if (disc[s] != -1) continue;
    std::vector<Frame> stack{{s, std::nullopt, 0}};
    disc[s] = low[s] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto nbrs = g.neighbors(f.v);
      if (f.next < nbrs.size()) {
        Vertex w = nbrs[f.next++];
        EdgeId id = *g.edge_id(f.v, w);
        if (f.via && *f.via == id) continue;
        if (disc[w] == -1) {
          disc[w] = low[w] = timer++;
          stack.push_back({w, id, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      Frame done = f;
      stack.pop_back();
      if (!stack.empty()) {
        Vertex p = stack.back().v;
        low[p] = std::min(low[p], low[done.v]);
        if (low[done.v] > disc[p]) out.push_back(*done.via);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cyclemetrics
