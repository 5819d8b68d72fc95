#include "cyclemetrics/cyclewidth.hpp"

#include <algorithm>
#include <stdexcept>

#include "cyclemetrics/disjoint_set.hpp"
#include "cyclemetrics/errors.hpp"

namespace cyclemetrics {

namespace {

int higher_level(std::span<const int> levels, const Edge& e) { return std::max(levels[e.u], levels[e.v]); }

std::vector<bool> level_edge_mask(const Graph& g, std::span<const int> levels, int n) {
  std::vector<bool> mask(g.edge_count(), false);
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    const int top = higher_level(levels, g.edge(id));
    mask[id] = top != kUnreachable && top > n;
  }
  return mask;
}

}  // namespace

LevelEdgeSet level_edge_set(const Graph& g, std::span<const int> levels, int n) {
  LevelEdgeSet out{n, {}};
  const auto mask = level_edge_mask(g, levels, n);
  for (EdgeId id = 0; id < g.edge_count(); ++id)
    if (mask[id]) out.edges.push_back(g.edge(id));
  return out;
}

WidthResult width_from_root(const Graph& g, const DistanceMatrix& dist, Vertex root) {
  if (root >= g.vertex_count()) throw InputError("root " + std::to_string(root) + " out of range");
  const auto levels = dist.row(root);
  int top = 0;
  for (int l : levels)
    if (l != kUnreachable) top = std::max(top, l);

  std::vector<std::vector<Vertex>> by_level(static_cast<std::size_t>(top) + 1);
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (levels[v] != kUnreachable) by_level[static_cast<std::size_t>(levels[v])].push_back(v);
  std::vector<std::vector<Edge>> edges_by_top(static_cast<std::size_t>(top) + 1);
  for (const Edge& e : g.edges()) {
    const int t = higher_level(levels, e);
    if (t != kUnreachable) edges_by_top[static_cast<std::size_t>(t)].push_back(e);
  }

  WidthResult best;
  DisjointSet dsu(g.vertex_count());
  for (int n = top; n >= 0; --n) {
    if (n + 1 <= top) {
      for (const Edge& e : edges_by_top[static_cast<std::size_t>(n + 1)]) dsu.unite(e.u, e.v);
    }
    const auto& layer = by_level[static_cast<std::size_t>(n)];
    std::optional<WidthWitness> layer_best;
    for (std::size_t i = 0; i < layer.size(); ++i) {
      for (std::size_t j = i + 1; j < layer.size(); ++j) {
        const Vertex x = layer[i], y = layer[j];
        if (!dsu.same(x, y)) continue;
        const int d = dist(x, y);
        if (!layer_best || d > layer_best->distance) layer_best = WidthWitness{root, n, x, y, d};
      }
    }
    // Lower levels are visited later, so ties replace.
    if (layer_best && layer_best->distance >= best.width) {
      best.width = layer_best->distance;
      best.witness = layer_best;
    }
  }
  return best;
}

WidthResult cycle_width(const Graph& g, const DistanceMatrix& dist) {
  if (!is_connected(g)) throw InputError("cycle width needs a connected graph");
  WidthResult best;
  for (Vertex r = 0; r < g.vertex_count(); ++r) {
    auto res = width_from_root(g, dist, r);
    if (res.width > best.width) best = res;
  }
  return best;
}

WidthResult cycle_width(const Graph& g) { return cycle_width(g, all_pairs_distances(g)); }

void validate_witness(const Graph& g, const DistanceMatrix& dist, const WidthWitness& w) {
  const std::size_t n = g.vertex_count();
  if (w.root >= n || w.x >= n || w.y >= n) throw InputError("witness vertex out of range");
  if (w.x == w.y) throw InputError("witness needs two distinct vertices");
  const auto levels = dist.row(w.root);
  if (levels[w.x] != w.level || levels[w.y] != w.level) {
    throw InputError("witness vertices are not both on level " + std::to_string(w.level));
  }
  if (dist(w.x, w.y) != w.distance) {
    throw InputError("witness distance " + std::to_string(w.distance) + " differs from d(x,y) = " +
                     std::to_string(dist(w.x, w.y)));
  }
  const auto reach = bfs_distances_filtered(g, w.x, level_edge_mask(g, levels, w.level));
  if (reach[w.y] == kUnreachable) throw InputError("witness vertices are not connected through R(level)");
}

SupportedCycleCertificate build_supported_cycle(const Graph& g, const DistanceMatrix& dist, const WidthWitness& w) {
  validate_witness(g, dist, w);
  const BfsLayering tree = bfs(g, w.root);

  // Tree paths up to the root; the meeting point is their last common vertex.
  auto up_x = tree.path_to_root(w.x);
  auto up_y = tree.path_to_root(w.y);
  std::size_t shared = 0;
  while (shared < up_x.size() && shared < up_y.size() &&
         up_x[up_x.size() - 1 - shared] == up_y[up_y.size() - 1 - shared]) {
    ++shared;
  }
  up_x.resize(up_x.size() - shared + 1);  // x .. meet
  up_y.resize(up_y.size() - shared);      // y .. child of meet

  const auto levels = dist.row(w.root);
  auto detour = shortest_path_filtered(g, w.x, w.y, level_edge_mask(g, levels, w.level));
  if (!detour) throw std::logic_error("validated witness lost its R(level) path");

  SupportedCycleCertificate cert;
  cert.cycle = up_x;                                            // x -> meet
  cert.cycle.insert(cert.cycle.end(), up_y.rbegin(), up_y.rend());  // -> y
  // y back to x along the detour, endpoints excluded.
  for (std::size_t i = detour->size() - 1; i-- > 1;) cert.cycle.push_back((*detour)[i]);
  const std::size_t meet_pos = up_x.size() - 1;
  cert.cuts = {0, meet_pos, meet_pos + up_y.size()};
  cert.claimed_k = (w.distance + 2) / 3;

  const auto value = supported_value(g, dist, cert.cycle, cert.cuts);
  cert.verified_k = value.value;
  if (cert.verified_k < cert.claimed_k) {
    throw std::logic_error("supported cycle from width witness verifies at " + std::to_string(cert.verified_k) +
                           ", below its claim " + std::to_string(cert.claimed_k));
  }
  return cert;
}

SupportApproximation support_approx(const Graph& g) {
  const DistanceMatrix dist = all_pairs_distances(g);
  const WidthResult width = cycle_width(g, dist);
  SupportApproximation out;
  out.width = width.width;
  out.lower = (width.width + 2) / 3;
  out.upper = width.width + 4;
  out.witness = width.witness;
  if (width.witness) out.certificate = build_supported_cycle(g, dist, *width.witness);
  return out;
}

nlohmann::json witness_to_json(const WidthWitness& w) {
  return {{"root", w.root}, {"level", w.level}, {"x", w.x}, {"y", w.y}, {"distance", w.distance}};
}

}  // namespace cyclemetrics
