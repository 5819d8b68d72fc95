#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "cyclemetrics/graph.hpp"
#include "cyclemetrics/plane_graph.hpp"

namespace cyclemetrics {

/// A closed walk around the outside of a grid with three cut positions
/// (indices into `cycle`) splitting it into the canonical intervals.
struct ExteriorCycle {
  std::vector<Vertex> cycle;
  std::array<std::size_t, 3> cuts{};
};

struct GridGraph {
  Graph graph;
  std::vector<std::pair<int, int>> coords;  // (row, column) per vertex
  ExteriorCycle exterior;
  PlaneGraph plane;
};

/// Vertex-subdivision of every edge. Blue vertices keep their ids 0..n-1; red
/// vertex n+i sits on the i-th edge of the base in sorted edge order.
struct SubdividedGraph {
  Graph base;
  Graph result;
  std::vector<Vertex> blue;
  std::vector<Vertex> red;
  std::vector<Edge> edge_of_red;  // indexed by red vertex id - n

  bool is_blue(Vertex v) const noexcept { return v < base.vertex_count(); }
};

Graph gen_path(std::size_t n);
Graph gen_cycle(std::size_t n);
Graph gen_complete(std::size_t n);

/// P_m x P_n: m rows, n columns, vertex (i,j) has id i*n + j. The exterior
/// is split into the left side, the top side, and right+bottom.
GridGraph gen_rect_grid(std::size_t m, std::size_t n);

/// Triangular grid with n vertices per side: row i (0..n-1) holds i+1
/// vertices (i,0..i). The exterior is split into its three sides.
GridGraph gen_tri_grid(std::size_t n);

SubdividedGraph subdivide(const Graph& g);

/// The 7-cycle a3-a2-u-x-b3-b2-v with the chord x-a3 subdivided by "mid".
/// Ids follow the order a3, a2, u, x, b3, b2, v, mid.
Graph gen_lok_counterexample();

/// Plane embeddings for the families that have an obvious one.
PlaneGraph plane_cycle(std::size_t n);
/// Single outer face whose boundary walks every edge twice.
PlaneGraph plane_tree(const Graph& tree);

}  // namespace cyclemetrics
