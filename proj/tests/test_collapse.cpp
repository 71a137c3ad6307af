// Free-vertex collapse: the greedy run, all branches, and the tree
// characterization over every small connected graph.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include <grodeg/collapse.hpp>
#include <grodeg/corpus.hpp>
#include <grodeg/error.hpp>

using namespace grodeg;

TEST_CASE("graph construction canonicalizes edges") {
  Graph g = Graph::from_edges(4, {{3, 0}, {0, 3}, {1, 2}});
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 3}, {1, 2}});
  CHECK(g.has_edge(3, 0));
  CHECK_FALSE(g.has_edge(0, 1));
  CHECK(g.degree(0) == 1);
  CHECK(g.neighbors(3) == std::vector<int>{0});
  CHECK_THROWS_AS(Graph::from_edges(2, {{0, 0}}), PreconditionError);
  CHECK_THROWS_AS(Graph::from_edges(2, {{0, 2}}), PreconditionError);
}

TEST_CASE("graphs convert to complexes and back") {
  Graph g = cycle_graph(4);
  SimplicialComplex cx = g.as_complex();
  CHECK(cx.has_full_vertex_set());
  CHECK(Graph::from_complex(cx) == g);
  // 2-dimensional complexes and missing vertices are rejected
  CHECK_THROWS_AS(Graph::from_complex(SimplicialComplex::full_simplex(3)),
                  PreconditionError);
  CHECK_THROWS_AS(
      Graph::from_complex(SimplicialComplex::from_facets(3, {Face{0, 1}})),
      PreconditionError);
  // a graph with an isolated vertex survives the round trip
  Graph iso = Graph::from_edges(3, {{0, 1}});
  CHECK(Graph::from_complex(iso.as_complex()) == iso);
}

TEST_CASE("free vertices are the degree one vertices") {
  // free means exactly one incident edge; isolated is not free
  CHECK(free_vertices(cycle_graph(4), {0, 1, 2, 3}).empty());
  CHECK(free_vertices(path_graph(4), {0, 1, 2, 3}) == std::vector<int>{0, 3});
  CHECK(free_vertices(star_graph(), {0, 1, 2, 3}) == std::vector<int>{0, 1, 2});
  CHECK(free_vertices(Graph::from_edges(3, {{0, 1}}), {0, 1, 2}) ==
        std::vector<int>{0, 1});
  // restriction to an induced subgraph changes the degrees
  CHECK(free_vertices(cycle_graph(4), {0, 1, 2}) == std::vector<int>{0, 2});
  CHECK(free_vertices(pendant_triangle_graph(), {0, 1, 2, 3}) ==
        std::vector<int>{0});
}

TEST_CASE("greedy collapse, worked examples") {
  // a cycle has no free vertex at all
  CollapseResult cyc = collapse(cycle_graph(4));
  CHECK(cyc.count() == 0);
  CHECK(cyc.removed.empty());
  CHECK(cyc.core == std::vector<int>{0, 1, 2, 3});

  // paths and stars collapse to a single vertex
  CollapseResult path = collapse(path_graph(4));
  CHECK(path.count() == 3);
  CHECK(path.core.size() == 1);
  CollapseResult star = collapse(star_graph());
  CHECK(star.count() == 3);
  CHECK(star.removed == std::vector<int>{0, 1, 2});
  CHECK(star.core == std::vector<int>{3});

  // the pendant vertex goes, the triangle stays
  CollapseResult pend = collapse(pendant_triangle_graph());
  CHECK(pend.count() == 1);
  CHECK(pend.removed == std::vector<int>{0});
  CHECK(pend.core == std::vector<int>{1, 2, 3});
}

TEST_CASE("all branches of a non-tree agree") {
  auto branches = collapse_all_branches(cycle_graph(4));
  REQUIRE(branches.size() == 1);
  CHECK(branches[0].count() == 0);

  auto pend = collapse_all_branches(pendant_triangle_graph());
  REQUIRE(pend.size() == 1);
  CHECK(pend[0].removed == std::vector<int>{0});
  CHECK(pend[0].core == std::vector<int>{1, 2, 3});
}

TEST_CASE("trees collapse fully along every branch") {
  for (const Graph& g : {path_graph(5), star_graph(), path_graph(2)}) {
    auto branches = collapse_all_branches(g);
    for (const auto& b : branches) {
      CHECK(b.count() == g.nverts() - 1);
      CHECK(b.core.size() == 1);
    }
  }
  // distinct terminal cores are reported once each: a path can end anywhere
  auto ends = collapse_all_branches(path_graph(3));
  std::set<std::vector<int>> cores;
  for (const auto& b : ends) cores.insert(b.core);
  CHECK(cores == std::set<std::vector<int>>{{0}, {1}, {2}});
}

TEST_CASE("connectivity and tree predicates") {
  CHECK(is_connected(path_graph(5)));
  CHECK(is_connected(cycle_graph(4)));
  CHECK_FALSE(is_connected(Graph::from_edges(4, {{0, 1}, {2, 3}})));
  CHECK_FALSE(is_connected(Graph::from_edges(3, {{0, 1}})));
  CHECK(is_connected(Graph::from_edges(1, {})));
  CHECK(is_tree(path_graph(5)));
  CHECK(is_tree(star_graph()));
  CHECK(is_tree(Graph::from_edges(1, {})));
  CHECK_FALSE(is_tree(cycle_graph(3)));
  CHECK_FALSE(is_tree(pendant_triangle_graph()));
  CHECK_FALSE(is_tree(Graph::from_edges(4, {{0, 1}, {2, 3}})));
}

TEST_CASE("collapse characterizes trees among connected graphs") {
  for (int n = 2; n <= 6; ++n) {
    for (const Graph& g : connected_graphs(n)) {
      long ell = collapse(g).count();
      bool tree = static_cast<long>(g.edges().size()) == n - 1;
      CHECK(is_tree(g) == tree);
      CHECK((ell == n - 1) == tree);
      if (!tree) {
        // every removal order of a non-tree reaches the same core
        auto branches = collapse_all_branches(g);
        CHECK(branches.size() == 1);
        CHECK(branches[0].count() == ell);
      }
    }
  }
}

TEST_CASE("adding an edge to a connected graph cannot raise the count") {
  for (int n = 3; n <= 5; ++n) {
    for (const Graph& g : connected_graphs(n)) {
      long ell = collapse(g).count();
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
          if (g.has_edge(a, b)) continue;
          auto edges = g.edges();
          edges.push_back({a, b});
          CHECK(collapse(Graph::from_edges(n, edges)).count() <= ell);
        }
    }
  }
}

TEST_CASE("branch enumeration has a vertex budget") {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 8; ++i) edges.push_back({i, i + 1});
  CHECK_THROWS_AS(collapse_all_branches(Graph::from_edges(9, edges)), BudgetError);
  CHECK(collapse_all_branches(Graph::from_edges(9, edges), 9).size() == 9);
}

TEST_CASE("connected graph census sizes") {
  CHECK(connected_graphs(2).size() == 1);
  CHECK(connected_graphs(3).size() == 4);
  CHECK(connected_graphs(4).size() == 38);
  CHECK(connected_graphs(5).size() == 728);
}
