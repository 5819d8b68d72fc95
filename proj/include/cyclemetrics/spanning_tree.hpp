#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "cyclemetrics/graph.hpp"

namespace cyclemetrics {

inline constexpr std::uint64_t kDefaultTreeCap = 10'000'000;

/// A spanning tree of some graph, as its sorted edge list plus the parent
/// array of the form rooted at vertex 0.
class SpanningTree {
 public:
  /// Throws InputError unless `edges` is a spanning tree of g.
  static SpanningTree from_edges(const Graph& g, std::vector<Edge> edges);

  std::span<const Edge> edges() const noexcept { return edges_; }
  std::size_t vertex_count() const noexcept { return parent_.size(); }
  std::optional<Vertex> parent(Vertex v) const { return parent_.at(v); }
  int depth(Vertex v) const { return depth_.at(v); }

  /// Hop distance between a and b inside the tree.
  int distance(Vertex a, Vertex b) const;
  /// Tree path from a to b, both endpoints included.
  std::vector<Vertex> path(Vertex a, Vertex b) const;

 private:
  std::vector<Edge> edges_;
  std::vector<std::optional<Vertex>> parent_;
  std::vector<int> depth_;
};

/// Number of spanning trees by Kirchhoff's matrix-tree theorem, evaluated in
/// long double. Exact for counts well beyond any enumeration cap.
long double count_spanning_trees(const Graph& g);

/// Calls `visit` on every spanning tree exactly once. Trees come out in
/// lexicographic order of their sorted edge lists (include-before-exclude
/// branching over sorted edges). Throws ResourceError when the matrix-tree
/// count exceeds `cap`, InputError when g is disconnected.
void for_each_spanning_tree(const Graph& g, std::uint64_t cap,
                            const std::function<void(const SpanningTree&)>& visit);

std::vector<SpanningTree> enumerate_spanning_trees(const Graph& g, std::uint64_t cap = kDefaultTreeCap);

}  // namespace cyclemetrics
