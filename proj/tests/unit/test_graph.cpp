#include <doctest.h>

#include <random>

#include "../support/brute_force.hpp"
#include "cyclemetrics/disjoint_set.hpp"
#include "cyclemetrics/errors.hpp"
#include "cyclemetrics/generators.hpp"
#include "cyclemetrics/graph.hpp"
#include "cyclemetrics/graph_io.hpp"

using namespace cyclemetrics;

namespace {

Graph random_connected(std::mt19937& rng, std::size_t n, double p) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(std::uniform_int_distribution<Vertex>(0, v - 1)(rng), v);
  std::bernoulli_distribution coin(p);
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (coin(rng) && std::find(edges.begin(), edges.end(), Edge(a, b)) == edges.end()) edges.emplace_back(a, b);
  return Graph(n, std::move(edges));
}

}  // namespace

TEST_CASE("graph construction rejects non-simple input") {
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), InputError);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), InputError);
  CHECK_THROWS_AS(Graph(2, {{0, 2}}), InputError);
  CHECK_THROWS_AS(Graph(2, {{0, 1}}, {"only-one"}), InputError);

  Graph g(4, {{2, 1}, {0, 3}, {1, 3}});
  CHECK(g.edge(0) == Edge(1, 2));
  CHECK(g.has_edge(3, 1));
  CHECK_FALSE(g.has_edge(0, 2));
  CHECK(*g.edge_id(3, 0) == 1);
  auto nbrs = g.neighbors(3);
  CHECK(std::vector<Vertex>(nbrs.begin(), nbrs.end()) == std::vector<Vertex>{0, 1});
}

TEST_CASE("bfs levels and parents") {
  auto c8 = gen_cycle(8);
  auto lay = bfs(c8, 0);
  CHECK(lay.level[4] == 4);
  CHECK(lay.level[1] == 1);
  CHECK(lay.level[7] == 1);
  // 4 has two neighbors on level 3; the smaller id wins.
  CHECK(*lay.parent[4] == 3);
  CHECK_FALSE(lay.parent[0].has_value());

  auto p4 = gen_path(4);
  CHECK(bfs(p4, 0).level == std::vector<int>{0, 1, 2, 3});

  Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(bfs(star, 0).level == std::vector<int>{0, 1, 1, 1});

  CHECK_THROWS_AS(bfs(p4, 4), InputError);

  Graph split(4, {{0, 1}, {2, 3}});
  CHECK(bfs(split, 0).level[2] == kUnreachable);
}

TEST_CASE("all pairs distances") {
  CHECK(all_pairs_distances(gen_cycle(8))(0, 4) == 4);
  auto k4 = all_pairs_distances(gen_complete(4));
  for (Vertex a = 0; a < 4; ++a)
    for (Vertex b = 0; b < 4; ++b) CHECK(k4(a, b) == (a == b ? 0 : 1));
  auto grid = gen_rect_grid(3, 3).graph;
  CHECK(all_pairs_distances(grid)(0, 8) == 4);
  Graph split(4, {{0, 1}, {2, 3}});
  CHECK(all_pairs_distances(split)(0, 3) == kUnreachable);
}

TEST_CASE("connectivity") {
  CHECK(is_connected(gen_cycle(8)));
  CHECK_FALSE(is_connected(Graph(4, {{0, 1}, {2, 3}})));
  CHECK(is_connected(Graph(1, {})));
  CHECK(is_connected(Graph()));
}

TEST_CASE("distance inside an edge subset") {
  auto c5 = gen_cycle(5);
  std::vector<Edge> minus_one{{0, 1}, {1, 2}, {2, 3}, {3, 4}};
  CHECK(distance_in_subgraph(c5, minus_one, 0, 4) == 4);
  CHECK(distance_in_subgraph(c5, minus_one, 2, 2) == 0);
  CHECK(distance_in_subgraph(c5, std::vector<Edge>{{0, 1}}, 0, 3) == std::nullopt);
  CHECK_THROWS_AS(distance_in_subgraph(c5, std::vector<Edge>{{0, 2}}, 0, 2), InputError);

  // R(2) of C_8 rooted at 0.
  std::vector<Edge> r2{{2, 3}, {3, 4}, {4, 5}, {5, 6}};
  CHECK(distance_in_subgraph(gen_cycle(8), r2, 2, 6) == 4);
}

TEST_CASE("distance invariants on random graphs") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + trial % 11;
    Graph g = random_connected(rng, n, 0.25);
    auto dist = all_pairs_distances(g);
    auto oracle = brute::floyd_warshall(g);
    for (Vertex r = 0; r < n; ++r) {
      auto lay = bfs(g, r);
      for (Vertex v = 0; v < n; ++v) {
        CHECK(dist(r, v) == oracle[r][v]);
        CHECK(lay.level[v] == dist(r, v));
        CHECK(dist(r, v) == dist(v, r));
        if (v != r) {
          REQUIRE(lay.parent[v]);
          CHECK(g.has_edge(v, *lay.parent[v]));
          CHECK(lay.level[*lay.parent[v]] == lay.level[v] - 1);
        }
      }
      for (const Edge& e : g.edges()) CHECK(std::abs(dist(r, e.u) - dist(r, e.v)) <= 1);
    }
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = 0; b < n; ++b) {
        CHECK((dist(a, b) == 1) == g.has_edge(a, b));
        CHECK(distance_in_subgraph(g, g.edges(), a, b) == dist(a, b));
      }
  }
}

TEST_CASE("disjoint set") {
  DisjointSet dsu(5);
  CHECK(dsu.components() == 5);
  CHECK(dsu.unite(0, 1));
  CHECK(dsu.unite(3, 4));
  CHECK_FALSE(dsu.unite(1, 0));
  CHECK(dsu.find(dsu.find(1)) == dsu.find(1));
  CHECK(dsu.same(0, 1));
  CHECK_FALSE(dsu.same(1, 3));
  CHECK(dsu.components() == 3);
}

TEST_CASE("bridges") {
  Graph lollipop(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}});
  CHECK(bridges(lollipop) == std::vector<EdgeId>{3, 4});
  CHECK(bridges(gen_cycle(6)).empty());
  CHECK(bridges(gen_path(4)).size() == 3);
}

TEST_CASE("edge-list parsing") {
  auto g = parse_edge_list("# comment\na b\nb c\n\n  c a\nd\n");
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 3);
  CHECK(g.label(0) == "a");
  CHECK(g.label(3) == "d");
  CHECK_THROWS_AS(parse_edge_list("a a\n"), InputError);
  CHECK_THROWS_AS(parse_edge_list("a b c\n"), InputError);
  CHECK_THROWS_AS(parse_edge_list("a b\nb a\n"), InputError);
}

TEST_CASE("graph JSON parsing") {
  auto g = parse_graph(R"({"vertices":["x","y",7],"edges":[[0,1],[1,2]]})");
  CHECK(g.vertex_count() == 3);
  CHECK(g.label(2) == "7");
  CHECK(g.has_edge(1, 2));
  CHECK_THROWS_AS(parse_graph(R"({"vertices":["x"],"edges":[[0,1]]})"), InputError);
  CHECK_THROWS_AS(parse_graph(R"({"vertices":["x"],)"), InputError);
}

TEST_CASE("edge-list writer round-trips ids and labels") {
  std::vector<Graph> graphs{gen_rect_grid(3, 4).graph, gen_tri_grid(4).graph, gen_lok_counterexample(),
                            gen_path(1), gen_cycle(5)};
  for (const Graph& g : graphs) {
    auto back = parse_graph(to_edge_list(g));
    REQUIRE(back.vertex_count() == g.vertex_count());
    CHECK(back.edge_count() == g.edge_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) CHECK(back.label(v) == g.label(v));
    for (const Edge& e : g.edges()) CHECK(back.has_edge(e.u, e.v));
    auto via_json = graph_from_json(graph_to_json(g));
    CHECK(via_json.edge_count() == g.edge_count());
  }
}
