#include <doctest.h>

#include "../support/brute_force.hpp"
#include "cyclemetrics/disjoint_set.hpp"
#include "cyclemetrics/errors.hpp"
#include "cyclemetrics/generators.hpp"
#include "cyclemetrics/planar_dual.hpp"
#include "cyclemetrics/stretch.hpp"

using namespace cyclemetrics;

namespace {

PlaneGraph plane_c4() {
  return plane_graph_from_json(nlohmann::json::parse(R"({
    "vertices": ["a","b","c","d"],
    "edges": [[0,1],[1,2],[2,3],[3,0]],
    "faces": [{"edges":[0,1,2,3],"outer":false},{"edges":[0,1,2,3],"outer":true}]
  })"));
}

}  // namespace

TEST_CASE("plane graph validation") {
  auto c4 = plane_c4();
  CHECK(validate_plane(c4));

  PlaneGraph p2{gen_path(2), {{{0, 0}, true}}};
  CHECK(validate_plane(p2));

  auto once = c4;
  once.faces[0].edges = {0, 1, 2};
  auto v = validate_plane(once);
  CHECK_FALSE(v);
  CHECK_FALSE(v.message.empty());

  auto euler = c4;
  euler.faces.push_back({{0}, false});
  CHECK_FALSE(validate_plane(euler));

  auto no_outer = c4;
  no_outer.faces[1].outer = false;
  CHECK_FALSE(validate_plane(no_outer));

  // A cycle edge listed twice on one face is not a bridge.
  auto wrong_bridge = c4;
  wrong_bridge.faces[0].edges = {0, 0, 1, 2};
  wrong_bridge.faces[1].edges = {1, 2, 3, 3};
  CHECK_FALSE(validate_plane(wrong_bridge));

  CHECK_THROWS_AS(plane_graph_from_json(nlohmann::json::parse(R"({"vertices":["a"],"edges":[]})")), InputError);
}

TEST_CASE("dual graph") {
  auto c4 = dual_graph(plane_c4());
  CHECK(c4.node_count == 2);
  CHECK(c4.edges.size() == 4);
  for (const auto& e : c4.edges) CHECK(e.a != e.b);

  auto grid = dual_graph(gen_rect_grid(3, 3).plane);
  CHECK(grid.node_count == 5);
  CHECK(grid.edges.size() == 12);

  auto tree = dual_graph(plane_tree(gen_path(5)));
  CHECK(tree.node_count == 1);
  for (const auto& e : tree.edges) CHECK(e.is_loop());

  auto broken = plane_c4();
  broken.faces.pop_back();
  CHECK_THROWS_AS(dual_graph(broken), InputError);
}

TEST_CASE("dual spanning trees") {
  auto c4 = plane_c4();
  auto t = SpanningTree::from_edges(c4.base, {{0, 1}, {1, 2}, {2, 3}});
  auto dual_tree = dual_spanning_tree(c4, t);
  REQUIRE(dual_tree.size() == 1);
  CHECK(dual_tree[0].a != dual_tree[0].b);

  auto grid = gen_rect_grid(3, 3);
  std::size_t seen = 0;
  for (const auto& tree : enumerate_spanning_trees(grid.graph)) {
    auto dt = dual_spanning_tree(grid.plane, tree);
    CHECK(dt.size() == 4);
    CHECK(tree.edges().size() + dt.size() == grid.graph.edge_count());
    DisjointSet dsu(5);
    for (const auto& e : dt) CHECK(dsu.unite(e.a, e.b));
    CHECK(dsu.components() == 1);
    ++seen;
  }
  CHECK(seen == 192);

  auto lollipop = PlaneGraph{Graph(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}}), {{{0, 1, 2}, false}, {{0, 1, 3, 3, 2}, true}}};
  REQUIRE(validate_plane(lollipop));
  for (const auto& tree : enumerate_spanning_trees(lollipop.base)) {
    for (const auto& e : dual_spanning_tree(lollipop, tree)) CHECK_FALSE(e.is_loop());
  }
}

TEST_CASE("congestion equals dual stretch plus one for every tree") {
  auto c4 = plane_c4();
  for (const auto& t : enumerate_spanning_trees(c4.base)) {
    auto check = verify_duality_lemma(c4, t);
    CHECK(check.congestion == 2);
    CHECK(check.dual_stretch == 1);
    CHECK(check.equal);
  }
  auto grid = gen_rect_grid(3, 3);
  for (const auto& t : enumerate_spanning_trees(grid.graph)) CHECK(verify_duality_lemma(grid.plane, t).equal);

  auto tree = plane_tree(gen_path(4));
  auto only = enumerate_spanning_trees(tree.base);
  REQUIRE(only.size() == 1);
  auto check = verify_duality_lemma(tree, only[0]);
  CHECK(check.congestion == 1);
  CHECK(check.dual_stretch == 0);
  CHECK(check.equal);
}

TEST_CASE("spanning tree congestion equals dual stretch plus one") {
  auto c4 = verify_duality_global(plane_c4());
  CHECK(c4.congestion == 2);
  CHECK(c4.dual_stretch == 1);
  CHECK(c4.equal_plus_one);

  auto c8 = verify_duality_global(plane_cycle(8));
  CHECK(c8.congestion == 2);
  CHECK(c8.dual_stretch == 1);

  auto grid = gen_rect_grid(3, 3);
  auto g = verify_duality_global(grid.plane);
  CHECK(g.equal_plus_one);
  CHECK(g.congestion == brute::min_congestion(grid.graph));

  for (std::size_t n = 2; n <= 4; ++n) CHECK(verify_duality_global(gen_tri_grid(n).plane).equal_plus_one);
  CHECK(verify_duality_global(plane_tree(gen_path(5))).equal_plus_one);
}

TEST_CASE("dual edge count survives a second dual") {
  auto grid = gen_rect_grid(2, 4).plane;
  auto dual = dual_graph(grid);
  CHECK(dual.edges.size() == grid.base.edge_count());
  auto simple = dual.simplified();
  CHECK(simple.vertex_count() == dual.node_count);
  CHECK(simple.edge_count() <= dual.edges.size());
}
