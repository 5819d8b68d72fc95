#include "cyclemetrics/spanning_tree.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

#include "cyclemetrics/disjoint_set.hpp"
#include "cyclemetrics/errors.hpp"

namespace cyclemetrics {

SpanningTree SpanningTree::from_edges(const Graph& g, std::vector<Edge> edges) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw InputError("spanning tree of an empty graph");
  if (edges.size() + 1 != n) {
    throw InputError("a spanning tree on " + std::to_string(n) + " vertices needs " + std::to_string(n - 1) +
                     " edges, got " + std::to_string(edges.size()));
  }
  std::sort(edges.begin(), edges.end());
  std::vector<std::vector<Vertex>> adj(n);
  DisjointSet dsu(n);
  for (const Edge& e : edges) {
    if (!g.has_edge(e.u, e.v)) {
      throw InputError("tree edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} is not in the graph");
    }
    if (!dsu.unite(e.u, e.v)) throw InputError("tree edges contain a cycle");
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  SpanningTree t;
  t.edges_ = std::move(edges);
  t.parent_.assign(n, std::nullopt);
  t.depth_.assign(n, -1);
  std::deque<Vertex> queue{0};
  t.depth_[0] = 0;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : adj[v]) {
      if (t.depth_[w] != -1) continue;
      t.depth_[w] = t.depth_[v] + 1;
      t.parent_[w] = v;
      queue.push_back(w);
    }
  }
  return t;
}

int SpanningTree::distance(Vertex a, Vertex b) const {
  int d = 0;
  while (a != b) {
    if (depth_[a] < depth_[b]) std::swap(a, b);
    a = *parent_[a];
    ++d;
  }
  return d;
}

std::vector<Vertex> SpanningTree::path(Vertex a, Vertex b) const {
  std::vector<Vertex> front{a}, back{b};
  while (a != b) {
    if (depth_[a] >= depth_[b]) {
      a = *parent_[a];
      front.push_back(a);
    } else {
      b = *parent_[b];
      back.push_back(b);
    }
  }
  front.insert(front.end(), back.rbegin() + 1, back.rend());
  return front;
}

long double count_spanning_trees(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n <= 1) return 1.0L;
  if (!is_connected(g)) return 0.0L;
  // Reduced Laplacian: drop the last row and column.
  const std::size_t k = n - 1;
  std::vector<long double> a(k * k, 0.0L);
  for (const Edge& e : g.edges()) {
    if (e.u < k) a[e.u * k + e.u] += 1;
    if (e.v < k) a[e.v * k + e.v] += 1;
    if (e.u < k && e.v < k) {
      a[e.u * k + e.v] -= 1;
      a[e.v * k + e.u] -= 1;
    }
  }
  long double det = 1.0L;
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < k; ++r)
      if (std::fabs(a[r * k + col]) > std::fabs(a[pivot * k + col])) pivot = r;
    if (a[pivot * k + col] == 0.0L) return 0.0L;
    if (pivot != col) {
      for (std::size_t c = 0; c < k; ++c) std::swap(a[col * k + c], a[pivot * k + c]);
      det = -det;
    }
    const long double p = a[col * k + col];
    det *= p;
    for (std::size_t r = col + 1; r < k; ++r) {
      const long double factor = a[r * k + col] / p;
      if (factor == 0.0L) continue;
      for (std::size_t c = col; c < k; ++c) a[r * k + c] -= factor * a[col * k + c];
    }
  }
  return std::round(det);
}

namespace {

class TreeEnumerator {
 public:
  TreeEnumerator(const Graph& g, const std::function<void(const SpanningTree&)>& visit)
      : g_(g), visit_(visit), edges_(g.edges().begin(), g.edges().end()) {
    std::sort(edges_.begin(), edges_.end());
  }

  void run() {
    if (g_.vertex_count() == 1) {
      visit_(SpanningTree::from_edges(g_, {}));
      return;
    }
    std::vector<std::size_t> comp(g_.vertex_count());
    for (std::size_t v = 0; v < comp.size(); ++v) comp[v] = v;
    recurse(0, comp);
  }

 private:
  // `comp` labels the components of the chosen forest; relabelling on merge
  // keeps backtracking trivial at desk scale.
  void recurse(std::size_t next, std::vector<std::size_t>& comp) {
    if (chosen_.size() + 1 == g_.vertex_count()) {
      visit_(SpanningTree::from_edges(g_, chosen_));
      return;
    }
    if (next == edges_.size()) return;
    const Edge e = edges_[next];
    if (comp[e.u] != comp[e.v]) {
      std::vector<std::size_t> merged = comp;
      const std::size_t from = comp[e.v], to = comp[e.u];
      for (auto& c : merged)
        if (c == from) c = to;
      chosen_.push_back(e);
      recurse(next + 1, merged);
      chosen_.pop_back();
    }
    if (still_spannable(next + 1, comp)) recurse(next + 1, comp);
  }

  // Can the chosen forest plus edges_[from..] still connect every vertex?
  bool still_spannable(std::size_t from, const std::vector<std::size_t>& comp) const {
    DisjointSet dsu(comp.size());
    for (std::size_t v = 0; v < comp.size(); ++v) dsu.unite(v, comp[v]);
    for (std::size_t i = from; i < edges_.size(); ++i) dsu.unite(edges_[i].u, edges_[i].v);
    return dsu.components() == 1;
  }

  const Graph& g_;
  const std::function<void(const SpanningTree&)>& visit_;
  std::vector<Edge> edges_;
  std::vector<Edge> chosen_;
};

}  // namespace

void for_each_spanning_tree(const Graph& g, std::uint64_t cap,
                            const std::function<void(const SpanningTree&)>& visit) {
  if (g.vertex_count() == 0) throw InputError("graph has no vertices");
  if (!is_connected(g)) throw InputError("graph is disconnected; it has no spanning tree");
  const long double count = count_spanning_trees(g);
  if (count > static_cast<long double>(cap)) {
    throw ResourceError("spanning tree count " + std::to_string(static_cast<double>(count)) + " exceeds the tree cap",
                        cap);
  }
  TreeEnumerator(g, visit).run();
}

std::vector<SpanningTree> enumerate_spanning_trees(const Graph& g, std::uint64_t cap) {
  std::vector<SpanningTree> out;
  for_each_spanning_tree(g, cap, [&](const SpanningTree& t) { out.push_back(t); });
  return out;
}

}  // namespace cyclemetrics
