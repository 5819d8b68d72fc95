#include "cyclemetrics/generators.hpp"

#include <algorithm>
#include <string>

#include "cyclemetrics/errors.hpp"

namespace cyclemetrics {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InputError(what);
}

EdgeId id_of(const Graph& g, Vertex a, Vertex b) { return *g.edge_id(a, b); }

}  // namespace

Graph gen_path(std::size_t n) {
  require(n >= 1, "path needs at least 1 vertex");
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, std::move(edges));
}

Graph gen_cycle(std::size_t n) {
  require(n >= 3, "cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(0, static_cast<Vertex>(n - 1));
  return Graph(n, std::move(edges));
}

Graph gen_complete(std::size_t n) {
  require(n >= 1, "complete graph needs at least 1 vertex");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(n, std::move(edges));
}

GridGraph gen_rect_grid(std::size_t m, std::size_t n) {
  require(m >= 2 && n >= 2, "rectangular grid needs m, n >= 2");
  auto id = [n](std::size_t i, std::size_t j) { return static_cast<Vertex>(i * n + j); };
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j + 1 < n; ++j) edges.emplace_back(id(i, j), id(i, j + 1));
  for (std::size_t i = 0; i + 1 < m; ++i)
    for (std::size_t j = 0; j < n; ++j) edges.emplace_back(id(i, j), id(i + 1, j));

  GridGraph out;
  out.graph = Graph(m * n, std::move(edges));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) out.coords.emplace_back(static_cast<int>(i), static_cast<int>(j));

  // Bottom-left corner, up the left side, along the top, down the right side,
  // back along the bottom.
  auto& cyc = out.exterior.cycle;
  for (std::size_t i = m; i-- > 0;) cyc.push_back(id(i, 0));
  for (std::size_t j = 1; j < n; ++j) cyc.push_back(id(0, j));
  for (std::size_t i = 1; i < m; ++i) cyc.push_back(id(i, n - 1));
  for (std::size_t j = n - 1; j-- > 1;) cyc.push_back(id(m - 1, j));
  out.exterior.cuts = {0, m - 1, (m - 1) + (n - 1)};

  const Graph& g = out.graph;
  out.plane.base = g;
  for (std::size_t i = 0; i + 1 < m; ++i) {
    for (std::size_t j = 0; j + 1 < n; ++j) {
      out.plane.faces.push_back({{id_of(g, id(i, j), id(i, j + 1)), id_of(g, id(i, j + 1), id(i + 1, j + 1)),
                                  id_of(g, id(i + 1, j + 1), id(i + 1, j)), id_of(g, id(i + 1, j), id(i, j))},
                                 false});
    }
  }
  Face outer{{}, true};
  for (std::size_t k = 0; k < cyc.size(); ++k) outer.edges.push_back(id_of(g, cyc[k], cyc[(k + 1) % cyc.size()]));
  out.plane.faces.push_back(std::move(outer));
  return out;
}

GridGraph gen_tri_grid(std::size_t n) {
  require(n >= 2, "triangular grid needs n >= 2");
  auto id = [](std::size_t i, std::size_t j) { return static_cast<Vertex>(i * (i + 1) / 2 + j); };
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      edges.emplace_back(id(i, j), id(i + 1, j));
      edges.emplace_back(id(i, j), id(i + 1, j + 1));
      edges.emplace_back(id(i + 1, j), id(i + 1, j + 1));
    }
  }
  GridGraph out;
  out.graph = Graph(n * (n + 1) / 2, std::move(edges));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) out.coords.emplace_back(static_cast<int>(i), static_cast<int>(j));

  // Apex, down the left side, along the bottom, back up the right side.
  auto& cyc = out.exterior.cycle;
  for (std::size_t i = 0; i < n; ++i) cyc.push_back(id(i, 0));
  for (std::size_t j = 1; j < n; ++j) cyc.push_back(id(n - 1, j));
  for (std::size_t i = n - 1; i-- > 1;) cyc.push_back(id(i, i));
  out.exterior.cuts = {0, n - 1, 2 * (n - 1)};

  const Graph& g = out.graph;
  out.plane.base = g;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      out.plane.faces.push_back({{id_of(g, id(i, j), id(i + 1, j)), id_of(g, id(i + 1, j), id(i + 1, j + 1)),
                                  id_of(g, id(i + 1, j + 1), id(i, j))},
                                 false});
    }
  }
  for (std::size_t i = 1; i + 1 < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      out.plane.faces.push_back({{id_of(g, id(i, j), id(i, j + 1)), id_of(g, id(i, j + 1), id(i + 1, j + 1)),
                                  id_of(g, id(i + 1, j + 1), id(i, j))},
                                 false});
    }
  }
  Face outer{{}, true};
  for (std::size_t k = 0; k < cyc.size(); ++k) outer.edges.push_back(id_of(g, cyc[k], cyc[(k + 1) % cyc.size()]));
  out.plane.faces.push_back(std::move(outer));
  return out;
}

SubdividedGraph subdivide(const Graph& g) {
  const auto n = static_cast<Vertex>(g.vertex_count());
  std::vector<Edge> sorted(g.edges().begin(), g.edges().end());
  std::sort(sorted.begin(), sorted.end());

  SubdividedGraph out;
  out.base = g;
  std::vector<Edge> edges;
  edges.reserve(2 * sorted.size());
  for (Vertex v = 0; v < n; ++v) out.blue.push_back(v);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const auto red = static_cast<Vertex>(n + i);
    out.red.push_back(red);
    out.edge_of_red.push_back(sorted[i]);
    edges.emplace_back(sorted[i].u, red);
    edges.emplace_back(red, sorted[i].v);
  }
  std::vector<std::string> labels;
  if (g.has_labels()) {
    labels = g.labels();
    for (const Edge& e : sorted) labels.push_back(g.label(e.u) + "~" + g.label(e.v));
  }
  out.result = Graph(n + sorted.size(), std::move(edges), std::move(labels));
  return out;
}

Graph gen_lok_counterexample() {
  enum : Vertex { a3, a2, u, x, b3, b2, v, mid };
  std::vector<Edge> edges{{a3, a2}, {a2, u}, {u, x}, {x, b3}, {b3, b2}, {b2, v}, {v, a3}, {x, mid}, {mid, a3}};
  return Graph(8, std::move(edges), {"a3", "a2", "u", "x", "b3", "b2", "v", "mid"});
}

PlaneGraph plane_cycle(std::size_t n) {
  PlaneGraph pg{gen_cycle(n), {}};
  Face walk;
  for (EdgeId id = 0; id < n; ++id) walk.edges.push_back(id);
  pg.faces.push_back(walk);
  walk.outer = true;
  pg.faces.push_back(std::move(walk));
  return pg;
}

PlaneGraph plane_tree(const Graph& tree) {
  if (tree.vertex_count() == 0 || tree.edge_count() + 1 != tree.vertex_count() || !is_connected(tree)) {
    throw InputError("plane_tree needs a tree");
  }
  // Euler tour: each edge once going down and once coming back.
  Face outer{{}, true};
  std::vector<std::pair<Vertex, std::size_t>> stack{{0, 0}};
  std::vector<bool> visited(tree.vertex_count(), false);
  visited[0] = true;
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    auto nbrs = tree.neighbors(v);
    if (next < nbrs.size()) {
      Vertex w = nbrs[next++];
      if (visited[w]) continue;
      visited[w] = true;
      outer.edges.push_back(*tree.edge_id(v, w));
      stack.emplace_back(w, 0);
      continue;
    }
    Vertex done = v;
    stack.pop_back();
    if (!stack.empty()) outer.edges.push_back(*tree.edge_id(stack.back().first, done));
  }
  PlaneGraph pg{tree, {}};
  pg.faces.push_back(std::move(outer));
  return pg;
}

}  // namespace cyclemetrics
