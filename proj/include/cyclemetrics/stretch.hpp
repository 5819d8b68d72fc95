#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "cyclemetrics/graph.hpp"
#include "cyclemetrics/spanning_tree.hpp"

namespace cyclemetrics {

/// Exact stretch of g: the minimum over spanning trees of the largest tree
/// distance between the ends of a graph edge.
struct StretchResult {
  int value = 0;
  SpanningTree witness_tree;
  std::optional<Edge> witness_edge;  // absent only for edgeless graphs
};

struct CongestionResult {
  int value = 0;
  SpanningTree witness_tree;
  std::optional<Edge> witness_edge;  // tree edge whose cut is crossed `value` times
};

struct EdgeCongestion {
  int value = 0;
  std::optional<Edge> witness_edge;
};

/// max over edges {u,v} of g of d_H(u,v), H = (V(g), h_edges).
/// Throws InputError when H is disconnected or uses non-edges of g.
int stretch_of(const Graph& g, std::span<const Edge> h_edges);

/// Same quantity for a spanning tree; O(m * depth) with no BFS.
int stretch_of(const Graph& g, const SpanningTree& t);

/// For each tree edge, the number of graph edges joining the two sides of
/// the tree with that edge removed; returns the maximum and the first tree
/// edge (sorted order) attaining it.
EdgeCongestion edge_congestion(const Graph& g, const SpanningTree& t);

/// Exhaustive minimum over spanning trees; the witness is the first optimal
/// tree in enumeration order.
StretchResult stretch_oracle(const Graph& g, std::uint64_t tree_cap = kDefaultTreeCap);
CongestionResult congestion_oracle(const Graph& g, std::uint64_t tree_cap = kDefaultTreeCap);

}  // namespace cyclemetrics
