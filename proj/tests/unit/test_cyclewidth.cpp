#include <doctest.h>

#include <random>

#include "../support/brute_force.hpp"
#include "cyclemetrics/cyclewidth.hpp"
#include "cyclemetrics/errors.hpp"
#include "cyclemetrics/generators.hpp"
#include "cyclemetrics/isocycle.hpp"
#include "cyclemetrics/stretch.hpp"

using namespace cyclemetrics;

namespace {

// W(r) straight from the definition: components of (V, R(n)) by
// Floyd-Warshall on the R(n) edges, for every level n.
int width_by_definition(const Graph& g, Vertex r) {
  auto d = brute::floyd_warshall(g);
  int top = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) top = std::max(top, d[r][v]);
  int best = 0;
  for (int n = 0; n <= top; ++n) {
    std::vector<Edge> rn;
    for (const Edge& e : g.edges())
      if (std::max(d[r][e.u], d[r][e.v]) > n) rn.push_back(e);
    auto reach = brute::floyd_warshall(g.vertex_count(), rn);
    for (Vertex x = 0; x < g.vertex_count(); ++x)
      for (Vertex y = 0; y < g.vertex_count(); ++y)
        if (x != y && d[r][x] == n && d[r][y] == n && reach[x][y] < brute::kInf) best = std::max(best, d[x][y]);
  }
  return best;
}

Graph random_connected(std::mt19937& rng, std::size_t n, double p) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(std::uniform_int_distribution<Vertex>(0, v - 1)(rng), v);
  std::bernoulli_distribution coin(p);
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (coin(rng) && std::find(edges.begin(), edges.end(), Edge(a, b)) == edges.end()) edges.emplace_back(a, b);
  return Graph(n, std::move(edges));
}

std::vector<Graph> corpus() {
  return {gen_path(6),       gen_cycle(5),          gen_cycle(8),          gen_cycle(10),
          gen_complete(4),   gen_complete(5),       gen_rect_grid(2, 3).graph, gen_rect_grid(3, 3).graph,
          gen_rect_grid(3, 4).graph, gen_tri_grid(3).graph, gen_tri_grid(4).graph, gen_lok_counterexample()};
}

}  // namespace

TEST_CASE("width from a root") {
  auto c8 = gen_cycle(8);
  auto d8 = all_pairs_distances(c8);
  auto res = width_from_root(c8, d8, 0);
  CHECK(res.width == 4);
  REQUIRE(res.witness);
  CHECK(*res.witness == WidthWitness{0, 2, 2, 6, 4});

  auto tree = Graph(6, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}});
  auto dt = all_pairs_distances(tree);
  for (Vertex r = 0; r < 6; ++r) {
    auto w = width_from_root(tree, dt, r);
    CHECK(w.width == 0);
    CHECK_FALSE(w.witness);
  }
  auto k4 = gen_complete(4);
  auto dk = all_pairs_distances(k4);
  for (Vertex r = 0; r < 4; ++r) CHECK(width_from_root(k4, dk, r).width == 0);
}

TEST_CASE("cycle width") {
  CHECK(cycle_width(gen_cycle(8)).width == 4);
  CHECK(cycle_width(gen_path(7)).width == 0);
  CHECK(cycle_width(gen_complete(4)).width == 0);
  CHECK_THROWS_AS(cycle_width(Graph(4, {{0, 1}, {2, 3}})), InputError);
}

TEST_CASE("width matches the definition evaluated by brute force") {
  std::mt19937 rng(5);
  auto graphs = corpus();
  for (int i = 0; i < 25; ++i) graphs.push_back(random_connected(rng, 4 + i % 9, 0.2));
  for (const Graph& g : graphs) {
    auto dist = all_pairs_distances(g);
    int overall = 0;
    for (Vertex r = 0; r < g.vertex_count(); ++r) {
      auto w = width_from_root(g, dist, r);
      CHECK(w.width == width_by_definition(g, r));
      if (w.witness) validate_witness(g, dist, *w.witness);
      overall = std::max(overall, w.width);
    }
    CHECK(cycle_width(g, dist).width == overall);
  }
}

TEST_CASE("level edge sets shrink with the level") {
  for (const Graph& g : corpus()) {
    auto dist = all_pairs_distances(g);
    for (Vertex r = 0; r < g.vertex_count(); ++r) {
      const auto levels = dist.row(r);
      const int top = *std::max_element(levels.begin(), levels.end());
      for (int n = 0; n <= top; ++n) {
        auto rn = level_edge_set(g, levels, n);
        auto next = level_edge_set(g, levels, n + 1);
        for (const Edge& e : next.edges) CHECK(std::find(rn.edges.begin(), rn.edges.end(), e) != rn.edges.end());
        for (const Edge& e : rn.edges) CHECK(std::min(levels[e.u], levels[e.v]) >= n);
      }
      CHECK(level_edge_set(g, levels, top).edges.empty());
    }
  }
}

TEST_CASE("zero width exactly on acyclic graphs in the corpus") {
  for (const Graph& g : corpus()) {
    const bool tree = g.edge_count() + 1 == g.vertex_count();
    const int w = cycle_width(g).width;
    if (tree) CHECK(w == 0);
    if (w >= 1) CHECK_FALSE(tree);
  }
}

TEST_CASE("witness validation") {
  auto c8 = gen_cycle(8);
  auto d8 = all_pairs_distances(c8);
  validate_witness(c8, d8, {0, 2, 2, 6, 4});
  CHECK_THROWS_AS(validate_witness(c8, d8, {0, 2, 2, 6, 3}), InputError);
  CHECK_THROWS_AS(validate_witness(c8, d8, {0, 2, 2, 5, 3}), InputError);
  CHECK_THROWS_AS(validate_witness(c8, d8, {0, 2, 2, 2, 0}), InputError);
  // Level-1 vertices of a path are not linked through R(1).
  auto p5 = gen_path(5);
  CHECK_THROWS_AS(validate_witness(p5, all_pairs_distances(p5), {2, 1, 1, 3, 2}), InputError);
  CHECK_THROWS_AS(build_supported_cycle(c8, d8, {0, 2, 2, 6, 3}), InputError);
}

TEST_CASE("supported cycle from a width witness") {
  auto c8 = gen_cycle(8);
  auto d8 = all_pairs_distances(c8);
  auto cert = build_supported_cycle(c8, d8, {0, 2, 2, 6, 4});
  CHECK(cert.cycle == std::vector<Vertex>{2, 1, 0, 7, 6, 5, 4, 3});
  std::array<Vertex, 3> cut_vertices{cert.cycle[cert.cuts[0]], cert.cycle[cert.cuts[1]], cert.cycle[cert.cuts[2]]};
  CHECK(cut_vertices == std::array<Vertex, 3>{2, 0, 6});
  CHECK(cert.claimed_k == 2);
  CHECK(cert.verified_k == 2);

  auto grid = gen_rect_grid(3, 3).graph;
  auto dg = all_pairs_distances(grid);
  auto w = cycle_width(grid, dg);
  REQUIRE(w.witness);
  auto gc = build_supported_cycle(grid, dg, *w.witness);
  CHECK(gc.verified_k >= (w.width + 2) / 3);
  CHECK(verify_certificate(grid, dg, gc).ok);
}

TEST_CASE("every width witness yields a verifying certificate") {
  for (const Graph& g : corpus()) {
    auto dist = all_pairs_distances(g);
    for (Vertex r = 0; r < g.vertex_count(); ++r) {
      auto w = width_from_root(g, dist, r);
      if (!w.witness) continue;
      auto cert = build_supported_cycle(g, dist, *w.witness);
      CHECK(3 * cert.verified_k >= w.witness->distance);
      auto check = verify_certificate(g, dist, cert);
      CHECK(check.ok);
      CHECK(check.verified_k == cert.verified_k);
      // Intervals meet pairwise in exactly their shared cut vertex.
      auto iv = cycle_intervals(cert.cycle, cert.cuts);
      for (int a = 0; a < 3; ++a) {
        for (int b = a + 1; b < 3; ++b) {
          std::size_t common = 0;
          for (Vertex v : iv[a]) common += std::count(iv[b].begin(), iv[b].end(), v);
          CHECK(common == 1);
        }
      }
    }
  }
}

TEST_CASE("support approximation brackets the exact support number") {
  auto tree = support_approx(gen_path(6));
  CHECK(tree.lower == 0);
  CHECK(tree.upper == 4);
  CHECK_FALSE(tree.certificate);

  auto c8 = support_approx(gen_cycle(8));
  CHECK(c8.lower == 2);
  CHECK(c8.upper == 8);
  REQUIRE(c8.certificate);
  CHECK(c8.certificate->verified_k >= 2);

  auto k4 = support_approx(gen_complete(4));
  CHECK(k4.lower == 0);
  CHECK(k4.upper == 4);

  for (const Graph& g : corpus()) {
    auto approx = support_approx(g);
    const int exact = support_oracle(g).k;
    CHECK(approx.lower <= exact);
    CHECK(exact <= approx.upper);
    if (approx.certificate) CHECK(approx.certificate->verified_k <= exact);
    CHECK(stretch_oracle(g).value >= approx.lower);
  }
}
