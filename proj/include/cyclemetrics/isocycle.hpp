#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cyclemetrics/cycles.hpp"
#include "cyclemetrics/graph.hpp"

namespace cyclemetrics {

using VertexPair = std::pair<Vertex, Vertex>;

/// Pair graph G_k: nodes are ordered pairs (u,v) with d(u,v) = floor(k/2);
/// (u,v) ~ (w,x) iff u~w and v~x in the base graph. Nodes are numbered in
/// lexicographic pair order.
class PairGraph {
 public:
  PairGraph(const Graph& g, const DistanceMatrix& dist, int k);

  int k() const noexcept { return k_; }
  int half() const noexcept { return k_ / 2; }
  std::size_t node_count() const noexcept { return pairs_.size(); }
  const std::vector<VertexPair>& pairs() const noexcept { return pairs_; }
  const VertexPair& pair(std::uint32_t node) const { return pairs_.at(node); }
  std::optional<std::uint32_t> node(Vertex u, Vertex v) const;
  std::span<const std::uint32_t> neighbors(std::uint32_t node) const { return adjacency_.at(node); }

  /// BFS distances from `source` in G_k, explored no deeper than max_depth.
  /// Unreached nodes get kUnreachable.
  std::vector<int> distances_from(std::uint32_t source, int max_depth) const;

 private:
  int k_;
  std::size_t base_n_;
  std::vector<VertexPair> pairs_;
  std::vector<std::int32_t> index_;  // base_n_ x base_n_, -1 when not a node
  std::vector<std::vector<std::uint32_t>> adjacency_;
};

/// Throws InputError for k < 3.
PairGraph build_gk(const Graph& g, const DistanceMatrix& dist, int k);

/// Pair of cycle vertices whose cycle distance exceeds their graph distance.
struct IsometryViolation {
  Vertex a = 0;
  Vertex b = 0;
  int cycle_distance = 0;
  int graph_distance = 0;
};

/// First violating pair in (i, j) position order, or nullopt when the cycle
/// is isometric. Throws InputError if `cycle` is not a simple cycle of g.
std::optional<IsometryViolation> find_isometry_violation(const Graph& g, const DistanceMatrix& dist,
                                                         std::span<const Vertex> cycle);
bool is_isometric_cycle(const Graph& g, const DistanceMatrix& dist, std::span<const Vertex> cycle);
bool is_isometric_cycle(const Graph& g, std::span<const Vertex> cycle);

/// M_k(first, second): {(first, second)} for even k; for odd k the nodes
/// (first, x) of G_k with x adjacent to `second`. Requires
/// d(first, second) = floor(k/2).
std::vector<VertexPair> m_set(const Graph& g, const DistanceMatrix& dist, int k, Vertex first, Vertex second);

struct Lemma36Witness {
  Vertex u = 0;
  Vertex v = 0;
  Vertex x = 0;
  friend auto operator<=>(const Lemma36Witness&, const Lemma36Witness&) = default;
};

/// All (u, v, x) with (v, x) in M_k(v, u) and d_{G_k}[(u,v), (v,x)] =
/// floor(k/2), k odd. Such a triple does not guarantee an isometric k-cycle;
/// this is a diagnostic only.
std::vector<Lemma36Witness> check_lemma36_conditions(const Graph& g, const DistanceMatrix& dist, int k);

/// Even k: a pair (u,v) with d_{G_k}[(u,v),(v,u)] = k/2 yields a cycle from
/// the two coordinate walks of a shortest G_k path. Every candidate is
/// verified before it is returned.
std::optional<Cycle> has_isometric_cycle_even(const Graph& g, const DistanceMatrix& dist, int k);

/// Odd k: searched as an isometric 2k-cycle of the subdivision, then mapped
/// back by dropping subdivision vertices and verified in g.
std::optional<Cycle> has_isometric_cycle_odd(const Graph& g, int k);

/// Parity dispatch of the two searches above.
std::optional<Cycle> find_isometric_cycle(const Graph& g, const DistanceMatrix& dist, int k);

struct IsometricCycleResult {
  int length = 0;  // 0 when g has no cycle
  Cycle cycle;
};

/// Scans k downwards from min(n, 2 * diameter + 1) and returns the first hit.
IsometricCycleResult longest_isometric_cycle(const Graph& g);

nlohmann::json isometric_to_json(const IsometricCycleResult& r);

}  // namespace cyclemetrics
