#pragma once

#include <cstdint>
#include <vector>

#include <json.hpp>

#include "cyclemetrics/plane_graph.hpp"
#include "cyclemetrics/spanning_tree.hpp"

namespace cyclemetrics {

struct DualEdge {
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  EdgeId source = 0;  // primal edge crossed by this dual edge

  bool is_loop() const noexcept { return a == b; }
};

/// Multigraph on faces: parallel edges and loops allowed. edges[i] is the
/// dual of primal edge i.
struct MultiGraph {
  std::size_t node_count = 0;
  std::vector<DualEdge> edges;

  /// Drops loops and collapses parallel edges. Node ids are kept.
  Graph simplified() const;
};

/// Throws InputError when the plane graph fails validation.
MultiGraph dual_graph(const PlaneGraph& pg);

/// Duals of the primal edges not in t; checked to form a spanning tree of the
/// dual (f - 1 edges, no loops, acyclic).
std::vector<DualEdge> dual_spanning_tree(const PlaneGraph& pg, const SpanningTree& t);

struct DualityCheck {
  int congestion = 0;    // ec(G:T)
  int dual_stretch = 0;  // Stretch(G*:T#), loops count 0
  bool equal = false;    // congestion == dual_stretch + 1
};

DualityCheck verify_duality_lemma(const PlaneGraph& pg, const SpanningTree& t);

struct GlobalDualityCheck {
  int congestion = 0;    // s(G)
  int dual_stretch = 0;  // sigma of the simplified dual
  bool equal_plus_one = false;
};

GlobalDualityCheck verify_duality_global(const PlaneGraph& pg, std::uint64_t tree_cap = kDefaultTreeCap);

nlohmann::json dual_to_json(const MultiGraph& dual);

}  // namespace cyclemetrics
