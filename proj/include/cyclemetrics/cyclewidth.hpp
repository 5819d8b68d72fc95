#pragma once

#include <optional>
#include <span>
#include <vector>

#include <json.hpp>

#include "cyclemetrics/graph.hpp"
#include "cyclemetrics/supported_cycle.hpp"

namespace cyclemetrics {

/// Two vertices on BFS level `level` from `root` that stay connected through
/// edges leaving the radius-`level` ball, at graph distance `distance`.
struct WidthWitness {
  Vertex root = 0;
  int level = 0;
  Vertex x = 0;
  Vertex y = 0;
  int distance = 0;

  friend bool operator==(const WidthWitness&, const WidthWitness&) = default;
};

struct WidthResult {
  int width = 0;
  std::optional<WidthWitness> witness;  // none when width is 0
};

/// R(n): edges with an endpoint strictly beyond level n.
struct LevelEdgeSet {
  int level = 0;
  std::vector<Edge> edges;
};

/// `levels` are hop distances from the root (a row of the distance matrix).
LevelEdgeSet level_edge_set(const Graph& g, std::span<const int> levels, int n);

/// W(r). Sweeps levels from the top down, merging the edges whose higher end
/// sits at level n+1 into a disjoint-set before pairing up level-n vertices.
/// Ties go to the smallest (level, x, y).
WidthResult width_from_root(const Graph& g, const DistanceMatrix& dist, Vertex root);

/// W(G) = max over roots; ties go to the smallest root. Throws InputError for
/// disconnected graphs.
WidthResult cycle_width(const Graph& g, const DistanceMatrix& dist);
WidthResult cycle_width(const Graph& g);

/// Throws InputError unless the witness holds for g.
void validate_witness(const Graph& g, const DistanceMatrix& dist, const WidthWitness& w);

/// Turns a width witness into a supported cycle: the BFS-tree paths x -> w
/// and w -> y (w the tree's meeting point of x and y) and a shortest x-y path
/// inside R(level). Cuts sit at x, w and y. claimed_k = ceil(distance / 3)
/// and verified_k is recomputed; a certificate below its claim is a bug and
/// raises std::logic_error.
SupportedCycleCertificate build_supported_cycle(const Graph& g, const DistanceMatrix& dist, const WidthWitness& w);

/// ceil(W/3) <= support number <= W + 4, the lower side backed by a
/// certificate whenever W > 0.
struct SupportApproximation {
  int width = 0;
  int lower = 0;
  int upper = 0;
  std::optional<WidthWitness> witness;
  std::optional<SupportedCycleCertificate> certificate;
};

SupportApproximation support_approx(const Graph& g);

nlohmann::json witness_to_json(const WidthWitness& w);

}  // namespace cyclemetrics
