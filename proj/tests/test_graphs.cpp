#include "matchcx/graph.hpp"

#include <doctest.h>

#include <random>
#include <set>
#include <sstream>

using namespace matchcx;

namespace {

// Pairs u < v by direct enumeration.
std::size_t pair_count(int n) {
  std::size_t c = 0;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) ++c;
  return c;
}

Graph random_graph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> es;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (coin(rng)) es.push_back({u, v});
  return Graph(n, es);
}

}  // namespace

TEST_CASE("complete graphs") {
  CHECK(complete_graph(1).num_vertices() == 1);
  CHECK(complete_graph(1).edges().empty());
  CHECK(complete_graph(4).edges().size() == 6);
  CHECK(complete_graph(7).edges().size() == pair_count(7));
  CHECK(complete_graph(7).edges().size() == 21);
}

TEST_CASE("complete bipartite graphs") {
  Graph g = complete_bipartite(3, 2);
  CHECK(g.edges().size() == 6);
  for (const auto& e : g.edges()) CHECK((e.u <= 3 && e.v >= 4));

  Graph one = complete_bipartite(1, 1);
  REQUIRE(one.edges().size() == 1);
  CHECK(one.edges()[0] == Edge{1, 2});

  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b) {
      Graph k = complete_bipartite(a, b);
      CHECK(k.edges().size() == static_cast<std::size_t>(a * b));
      for (const auto& e : k.edges()) CHECK(((e.u <= a) != (e.v <= a)));
    }
}

TEST_CASE("near-matching deleted graphs") {
  Graph g1 = near_matching_deleted_graph(1);
  CHECK(g1.num_vertices() == 3);
  CHECK(g1.edges() == std::vector<Edge>{{1, 2}, {1, 3}});

  Graph g2 = near_matching_deleted_graph(2);
  CHECK(g2.edges().size() == 8);
  CHECK_FALSE(g2.has_edge(2, 3));
  CHECK_FALSE(g2.has_edge(4, 5));
  CHECK(g2 == delete_edges(complete_graph(5), {{2, 3}, {4, 5}}));

  CHECK(near_matching_deleted_graph(3).edges().size() == 18);
  for (int k = 1; k <= 6; ++k)
    CHECK(near_matching_deleted_graph(k).edges().size() == pair_count(2 * k + 1) - static_cast<std::size_t>(k));
}

TEST_CASE("induced subgraphs") {
  auto k3 = induced_subgraph(complete_graph(4), {1, 2, 3});
  CHECK(k3.graph == complete_graph(3));
  CHECK(k3.to_parent == std::vector<int>{1, 2, 3});

  auto sub = induced_subgraph(near_matching_deleted_graph(2), {2, 3, 4, 5});
  CHECK(sub.graph.num_vertices() == 4);
  CHECK(sub.graph.edges().size() == 4);

  auto none = induced_subgraph(complete_graph(5), {});
  CHECK(none.graph.num_vertices() == 0);
  CHECK(none.graph.edges().empty());

  SUBCASE("restriction to all vertices is the identity") {
    std::mt19937 rng(7);
    for (int t = 0; t < 30; ++t) {
      Graph g = random_graph(rng, 1 + t % 9, 0.4);
      std::vector<int> all;
      for (int v = 1; v <= g.num_vertices(); ++v) all.push_back(v);
      CHECK(induced_subgraph(g, all).graph == g);
    }
  }

  CHECK_THROWS_AS(induced_subgraph(complete_graph(3), {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(induced_subgraph(complete_graph(3), {4}), std::invalid_argument);
}

TEST_CASE("edge deletion") {
  CHECK(delete_edges(complete_graph(3), {{2, 3}}).edges() == std::vector<Edge>{{1, 2}, {1, 3}});
  CHECK(delete_edges(complete_graph(5), {}) == complete_graph(5));
}

TEST_CASE("edge construction and validation") {
  CHECK(make_edge(5, 2) == Edge{2, 5});
  CHECK_THROWS_AS(make_edge(3, 3), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{1, 4}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{1, 2}, {2, 1}}), std::invalid_argument);
}

TEST_CASE("edge list round trip") {
  std::mt19937 rng(11);
  for (int t = 0; t < 20; ++t) {
    Graph g = random_graph(rng, 1 + t % 8, 0.5);
    std::istringstream in(format_edge_list(g));
    CHECK(parse_edge_list(in) == g);
  }
  std::istringstream commented("# a path\n3\n1 2  # first\n2 3\n");
  CHECK(parse_edge_list(commented) == Graph(3, {{1, 2}, {2, 3}}));
  std::istringstream bad("3\n1 x\n");
  CHECK_THROWS_AS(parse_edge_list(bad), std::invalid_argument);
}

TEST_CASE("disjoint union") {
  Graph u = disjoint_union(complete_graph(3), complete_graph(3), 3);
  CHECK(u.num_vertices() == 6);
  CHECK(u.edges().size() == 6);
  CHECK(u.has_edge(4, 6));
  CHECK_FALSE(u.has_edge(3, 4));
}
