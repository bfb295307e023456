#pragma once

#include <compare>
#include <cstdint>
#include <istream>
#include <string>
#include <vector>

namespace matchcx {

// Undirected edge {u, v} with u < v. Vertices are 1-based.
struct Edge {
  int u = 0;
  int v = 0;
  auto operator<=>(const Edge&) const = default;
  bool contains(int w) const { return u == w || v == w; }
  int other(int w) const { return w == u ? v : u; }
};

Edge make_edge(int a, int b);
std::string to_string(const Edge& e);

// Finite simple graph on the vertex set [n].
class Graph {
 public:
  Graph() = default;
  Graph(int n, std::vector<Edge> edges);

  int num_vertices() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  bool has_edge(int a, int b) const;
  // Vertices incident to at least one edge, as a bitmask (bit v for vertex v).
  std::uint64_t support_mask() const;

  bool operator==(const Graph&) const = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

constexpr int kMaxVertices = 62;

Graph complete_graph(int n);
// K_n restricted to the vertex subset S, kept on the vertex set [n].
Graph complete_graph_on(int n, const std::vector<int>& vertices);
// Parts {1..a} and {a+1..a+b}.
Graph complete_bipartite(int a, int b);
// K_{2k+1} minus the matching {23, 45, ..., (2k)(2k+1)}.
Graph near_matching_deleted_graph(int k);

struct InducedSubgraph {
  Graph graph;                  // relabelled on [|S|]
  std::vector<int> to_parent;   // to_parent[i - 1] = parent vertex of i
};

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices);
Graph delete_edges(const Graph& g, const std::vector<Edge>& removed);
// Disjoint union; the second graph is shifted by offset.
Graph disjoint_union(const Graph& a, const Graph& b, int offset);

// "n" on the first line, then one "u v" per line. '#' starts a comment.
Graph parse_edge_list(std::istream& in);
std::string format_edge_list(const Graph& g);

}  // namespace matchcx
