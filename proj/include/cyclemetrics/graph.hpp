#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cyclemetrics {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

// Hop distance sentinel for vertex pairs in different components.
inline constexpr int kUnreachable = std::numeric_limits<int>::max();

/// Undirected edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  Vertex other(Vertex x) const noexcept { return x == u ? v : u; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Edge ids follow construction order; adjacency lists are sorted ascending.
/// Optional labels map ids back to the names used by the input file.
class Graph {
 public:
  Graph() = default;

  /// Throws InputError on self-loops, duplicate edges or out-of-range ids.
  Graph(std::size_t n, std::vector<Edge> edges, std::vector<std::string> labels = {});

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId id) const { return edges_.at(id); }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

  bool has_edge(Vertex a, Vertex b) const;
  /// Id of edge {a,b}, or nullopt when absent.
  std::optional<EdgeId> edge_id(Vertex a, Vertex b) const;

  bool has_labels() const noexcept { return !labels_.empty(); }
  /// External name of v; the decimal id when the graph carries no labels.
  std::string label(Vertex v) const;
  const std::vector<std::string>& labels() const noexcept { return labels_; }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  // Parallel to adjacency_: id of the edge to each neighbor.
  std::vector<std::vector<EdgeId>> incident_;
  std::vector<std::string> labels_;
};

struct BfsLayering {
  Vertex root = 0;
  std::vector<int> level;                    // kUnreachable outside root's component
  std::vector<std::optional<Vertex>> parent;  // smallest-id neighbor one level closer

  int max_level() const;
  /// Vertices on the tree path from v up to the root, v first.
  std::vector<Vertex> path_to_root(Vertex v) const;
};

/// Dense n x n hop-distance table.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n) : n_(n), data_(n * n, kUnreachable) {}

  std::size_t size() const noexcept { return n_; }
  int operator()(Vertex a, Vertex b) const { return data_[static_cast<std::size_t>(a) * n_ + b]; }
  int& at(Vertex a, Vertex b) { return data_[static_cast<std::size_t>(a) * n_ + b]; }
  std::span<const int> row(Vertex a) const {
    return std::span<const int>(data_).subspan(static_cast<std::size_t>(a) * n_, n_);
  }
  /// Largest finite entry (0 for graphs with fewer than two vertices).
  int diameter() const;

 private:
  std::size_t n_ = 0;
  std::vector<int> data_;
};

/// Throws InputError when root is not a vertex of g.
BfsLayering bfs(const Graph& g, Vertex root);

DistanceMatrix all_pairs_distances(const Graph& g);

/// The vertexless graph counts as connected.
bool is_connected(const Graph& g);

/// Hop distance between u and v in the spanning subgraph (V(g), edge_subset);
/// nullopt when they are disconnected there. Throws InputError if an edge of
/// the subset is not an edge of g.
std::optional<int> distance_in_subgraph(const Graph& g, std::span<const Edge> edge_subset, Vertex u,
                                        Vertex v);

/// Single-source distances restricted to the edges selected by `allowed`
/// (indexed by EdgeId). Unreached vertices get kUnreachable.
std::vector<int> bfs_distances_filtered(const Graph& g, Vertex source,
                                        const std::vector<bool>& allowed);

/// Shortest path from `from` to `to` using only allowed edges, as a vertex
/// sequence. Ties resolve towards the smallest predecessor id.
std::optional<std::vector<Vertex>> shortest_path_filtered(const Graph& g, Vertex from, Vertex to,
                                                          const std::vector<bool>& allowed);

/// Edge ids of all bridges of g.
std::vector<EdgeId> bridges(const Graph& g);

}  // namespace cyclemetrics
