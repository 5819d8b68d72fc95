#include "cyclemetrics/isocycle.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "cyclemetrics/errors.hpp"
#include "cyclemetrics/generators.hpp"

namespace cyclemetrics {

PairGraph::PairGraph(const Graph& g, const DistanceMatrix& dist, int k)
    : k_(k), base_n_(g.vertex_count()), index_(base_n_ * base_n_, -1) {
  if (k < 3) throw InputError("cycle length k must be at least 3, got " + std::to_string(k));
  const int h = k / 2;
  for (Vertex u = 0; u < base_n_; ++u) {
    for (Vertex v = 0; v < base_n_; ++v) {
      if (dist(u, v) != h) continue;
      index_[u * base_n_ + v] = static_cast<std::int32_t>(pairs_.size());
      pairs_.emplace_back(u, v);
    }
  }
  adjacency_.resize(pairs_.size());
  for (std::uint32_t p = 0; p < pairs_.size(); ++p) {
    const auto [u, v] = pairs_[p];
    for (Vertex w : g.neighbors(u)) {
      for (Vertex x : g.neighbors(v)) {
        const std::int32_t q = index_[w * base_n_ + x];
        if (q >= 0) adjacency_[p].push_back(static_cast<std::uint32_t>(q));
      }
    }
  }
}

std::optional<std::uint32_t> PairGraph::node(Vertex u, Vertex v) const {
  if (u >= base_n_ || v >= base_n_) return std::nullopt;
  const std::int32_t q = index_[u * base_n_ + v];
  if (q < 0) return std::nullopt;
  return static_cast<std::uint32_t>(q);
}

std::vector<int> PairGraph::distances_from(std::uint32_t source, int max_depth) const {
  std::vector<int> dist(pairs_.size(), kUnreachable);
  std::deque<std::uint32_t> queue{source};
  dist.at(source) = 0;
  while (!queue.empty()) {
    const std::uint32_t p = queue.front();
    queue.pop_front();
    if (dist[p] >= max_depth) continue;
    for (std::uint32_t q : adjacency_[p]) {
      if (dist[q] != kUnreachable) continue;
      dist[q] = dist[p] + 1;
      queue.push_back(q);
    }
  }
  return dist;
}

PairGraph build_gk(const Graph& g, const DistanceMatrix& dist, int k) { return PairGraph(g, dist, k); }

std::optional<IsometryViolation> find_isometry_violation(const Graph& g, const DistanceMatrix& dist,
                                                         std::span<const Vertex> cycle) {
  require_cycle(g, cycle);
  const std::size_t len = cycle.size();
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = i + 1; j < len; ++j) {
      const int along = static_cast<int>(std::min(j - i, len - (j - i)));
      const int direct = dist(cycle[i], cycle[j]);
      if (direct != along) return IsometryViolation{cycle[i], cycle[j], along, direct};
    }
  }
  return std::nullopt;
}

bool is_isometric_cycle(const Graph& g, const DistanceMatrix& dist, std::span<const Vertex> cycle) {
  return !find_isometry_violation(g, dist, cycle).has_value();
}

bool is_isometric_cycle(const Graph& g, std::span<const Vertex> cycle) {
  return is_isometric_cycle(g, all_pairs_distances(g), cycle);
}

std::vector<VertexPair> m_set(const Graph& g, const DistanceMatrix& dist, int k, Vertex first, Vertex second) {
  if (k < 3) throw InputError("cycle length k must be at least 3");
  if (first >= g.vertex_count() || second >= g.vertex_count()) throw InputError("vertex out of range");
  const int h = k / 2;
  if (dist(first, second) != h) {
    throw InputError("(" + g.label(first) + ", " + g.label(second) + ") is not a node of G_" + std::to_string(k) +
                     ": distance " + std::to_string(dist(first, second)) + " != " + std::to_string(h));
  }
  if (k % 2 == 0) return {{first, second}};
  std::vector<VertexPair> out;
  for (Vertex x : g.neighbors(second))
    if (dist(first, x) == h) out.emplace_back(first, x);
  return out;
}

std::vector<Lemma36Witness> check_lemma36_conditions(const Graph& g, const DistanceMatrix& dist, int k) {
  if (k < 3 || k % 2 == 0) throw InputError("the odd-length pair condition needs an odd k >= 3");
  const PairGraph gk(g, dist, k);
  const int h = gk.half();
  std::vector<Lemma36Witness> out;
  for (std::uint32_t p = 0; p < gk.node_count(); ++p) {
    const auto [u, v] = gk.pair(p);
    const auto targets = m_set(g, dist, k, v, u);
    if (targets.empty()) continue;
    const auto reach = gk.distances_from(p, h);
    for (const auto& [vv, x] : targets) {
      if (reach[*gk.node(vv, x)] == h) out.push_back({u, v, x});
    }
  }
  return out;
}

namespace {

bool distinct(const Cycle& c) {
  Cycle sorted = c;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

// Depth-first walk over the shortest (u,v) -> (v,u) paths of G_k.
class ShortestPairPaths {
 public:
  ShortestPairPaths(const Graph& g, const DistanceMatrix& dist, const PairGraph& gk, std::uint32_t source,
                    std::vector<int> from_source)
      : g_(g), dist_(dist), gk_(gk), from_source_(std::move(from_source)), path_{source} {}

  std::optional<Cycle> search() {
    if (!walk()) return std::nullopt;
    return found_;
  }

 private:
  // Distance to the target (v,u) equals the distance from the source to the
  // coordinate swap, since swapping is an automorphism of G_k.
  int to_target(std::uint32_t node) const {
    const auto [a, b] = gk_.pair(node);
    return from_source_[*gk_.node(b, a)];
  }

  bool walk() {
    const int h = gk_.half();
    const int step = static_cast<int>(path_.size()) - 1;
    if (step == h) return accept();
    for (std::uint32_t q : gk_.neighbors(path_.back())) {
      if (from_source_[q] != step + 1 || to_target(q) != h - step - 1) continue;
      path_.push_back(q);
      if (walk()) return true;
      path_.pop_back();
    }
    return false;
  }

  bool accept() {
    const int h = gk_.half();
    Cycle c;
    for (int i = 0; i < h; ++i) c.push_back(gk_.pair(path_[static_cast<std::size_t>(i)]).first);
    for (int i = 0; i < h; ++i) c.push_back(gk_.pair(path_[static_cast<std::size_t>(i)]).second);
    if (!distinct(c) || !is_isometric_cycle(g_, dist_, c)) return false;
    found_ = std::move(c);
    return true;
  }

  const Graph& g_;
  const DistanceMatrix& dist_;
  const PairGraph& gk_;
  std::vector<int> from_source_;
  std::vector<std::uint32_t> path_;
  Cycle found_;
};

}  // namespace

std::optional<Cycle> has_isometric_cycle_even(const Graph& g, const DistanceMatrix& dist, int k) {
  if (k < 4 || k % 2 != 0) throw InputError("even search needs an even k >= 4, got " + std::to_string(k));
  if (static_cast<std::size_t>(k) > g.vertex_count()) return std::nullopt;
  const PairGraph gk(g, dist, k);
  const int h = gk.half();
  for (std::uint32_t p = 0; p < gk.node_count(); ++p) {
    const auto [u, v] = gk.pair(p);
    if (u > v) continue;  // (v,u) gives the same cycles reversed
    auto from_source = gk.distances_from(p, h);
    if (from_source[*gk.node(v, u)] != h) continue;
    if (auto c = ShortestPairPaths(g, dist, gk, p, std::move(from_source)).search()) return canonical_cycle(*c);
  }
  return std::nullopt;
}

namespace {

// Searches the subdivision for an isometric 2k-cycle and drops the
// subdivision vertices from it.
std::optional<Cycle> odd_via_subdivision(const Graph& g, const DistanceMatrix& dist, const SubdividedGraph& sub,
                                         const DistanceMatrix& sub_dist, int k) {
  auto doubled = has_isometric_cycle_even(sub.result, sub_dist, 2 * k);
  if (!doubled) return std::nullopt;
  Cycle c;
  for (Vertex w : *doubled)
    if (sub.is_blue(w)) c.push_back(w);
  if (c.size() != static_cast<std::size_t>(k) || !is_isometric_cycle(g, dist, c)) {
    throw std::logic_error("subdivision cycle did not map to an isometric cycle of the base graph");
  }
  return canonical_cycle(c);
}

}  // namespace

std::optional<Cycle> has_isometric_cycle_odd(const Graph& g, int k) {
  if (k < 3 || k % 2 == 0) throw InputError("odd search needs an odd k >= 3, got " + std::to_string(k));
  if (static_cast<std::size_t>(k) > g.vertex_count()) return std::nullopt;
  const SubdividedGraph sub = subdivide(g);
  return odd_via_subdivision(g, all_pairs_distances(g), sub, all_pairs_distances(sub.result), k);
}

std::optional<Cycle> find_isometric_cycle(const Graph& g, const DistanceMatrix& dist, int k) {
  if (k < 3) throw InputError("cycle length k must be at least 3");
  return k % 2 == 0 ? has_isometric_cycle_even(g, dist, k) : has_isometric_cycle_odd(g, k);
}

IsometricCycleResult longest_isometric_cycle(const Graph& g) {
  const DistanceMatrix dist = all_pairs_distances(g);
  const int upper = static_cast<int>(std::min<std::size_t>(g.vertex_count(), 2 * dist.diameter() + 1));
  std::optional<SubdividedGraph> sub;
  std::optional<DistanceMatrix> sub_dist;
  for (int k = upper; k >= 3; --k) {
    std::optional<Cycle> hit;
    if (k % 2 == 0) {
      hit = has_isometric_cycle_even(g, dist, k);
    } else {
      if (!sub) {
        sub = subdivide(g);
        sub_dist = all_pairs_distances(sub->result);
      }
      hit = odd_via_subdivision(g, dist, *sub, *sub_dist, k);
    }
    if (hit) return {k, std::move(*hit)};
  }
  return {};
}

nlohmann::json isometric_to_json(const IsometricCycleResult& r) { return {{"length", r.length}, {"cycle", r.cycle}}; }

}  // namespace cyclemetrics
