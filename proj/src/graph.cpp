#include "matchcx/graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace matchcx {

Edge make_edge(int a, int b) {
  if (a == b) throw std::invalid_argument("loop edge at vertex " + std::to_string(a));
  if (a < 1 || b < 1) throw std::invalid_argument("vertices are 1-based");
  return a < b ? Edge{a, b} : Edge{b, a};
}

std::string to_string(const Edge& e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  if (n > kMaxVertices) throw std::invalid_argument("too many vertices");
  for (auto& e : edges) {
    e = make_edge(e.u, e.v);
    if (e.v > n) throw std::invalid_argument("edge " + to_string(e) + " exceeds vertex count");
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::invalid_argument("duplicate edge");
  edges_ = std::move(edges);
}

bool Graph::has_edge(int a, int b) const {
  if (a == b || a < 1 || b < 1) return false;
  return std::binary_search(edges_.begin(), edges_.end(), make_edge(a, b));
}

std::uint64_t Graph::support_mask() const {
  std::uint64_t m = 0;
  for (const auto& e : edges_) m |= (1ULL << e.u) | (1ULL << e.v);
  return m;
}

Graph complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
  std::vector<Edge> es;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) es.push_back({a, b});
  return Graph(n, std::move(es));
}

Graph complete_graph_on(int n, const std::vector<int>& vertices) {
  std::vector<int> s = vertices;
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    throw std::invalid_argument("repeated vertex");
  std::vector<Edge> es;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) es.push_back({s[i], s[j]});
  return Graph(n, std::move(es));
}

Graph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("bipartite parts must be nonempty");
  std::vector<Edge> es;
  for (int x = 1; x <= a; ++x)
    for (int y = a + 1; y <= a + b; ++y) es.push_back({x, y});
  return Graph(a + b, std::move(es));
}

Graph near_matching_deleted_graph(int k) {
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  Graph full = complete_graph(2 * k + 1);
  std::vector<Edge> removed;
  for (int i = 1; i <= k; ++i) removed.push_back({2 * i, 2 * i + 1});
  return delete_edges(full, removed);
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
  std::vector<int> s = vertices;
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    throw std::invalid_argument("repeated vertex");
  std::vector<int> local(g.num_vertices() + 1, 0);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 1 || s[i] > g.num_vertices()) throw std::invalid_argument("vertex out of range");
    local[s[i]] = static_cast<int>(i) + 1;
  }
  std::vector<Edge> es;
  for (const auto& e : g.edges())
    if (local[e.u] && local[e.v]) es.push_back(make_edge(local[e.u], local[e.v]));
  return {Graph(static_cast<int>(s.size()), std::move(es)), s};
}

Graph delete_edges(const Graph& g, const std::vector<Edge>& removed) {
  std::vector<Edge> rm;
  for (const auto& e : removed) rm.push_back(make_edge(e.u, e.v));
  std::sort(rm.begin(), rm.end());
  std::vector<Edge> keep;
  for (const auto& e : g.edges())
    if (!std::binary_search(rm.begin(), rm.end(), e)) keep.push_back(e);
  return Graph(g.num_vertices(), std::move(keep));
}

Graph disjoint_union(const Graph& a, const Graph& b, int offset) {
  if (offset < 0) throw std::invalid_argument("negative offset");
  std::vector<Edge> es = a.edges();
  for (const auto& e : b.edges()) es.push_back({e.u + offset, e.v + offset});
  std::uint64_t bm = 0;
  for (const auto& e : b.edges()) bm |= (1ULL << (e.u + offset)) | (1ULL << (e.v + offset));
  if (a.support_mask() & bm) throw std::invalid_argument("vertex sets overlap");
  return Graph(std::max(a.num_vertices(), b.num_vertices() + offset), std::move(es));
}

Graph parse_edge_list(std::istream& in) {
  std::string line;
  int n = -1;
  std::vector<Edge> es;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto p = line.find('#'); p != std::string::npos) line.resize(p);
    std::istringstream ls(line);
    std::vector<long> nums;
    long x;
    while (ls >> x) nums.push_back(x);
    if (!ls.eof()) throw std::invalid_argument("edge list line " + std::to_string(lineno) + ": not an integer");
    if (nums.empty()) continue;
    if (n < 0) {
      if (nums.size() != 1) throw std::invalid_argument("edge list must start with the vertex count");
      n = static_cast<int>(nums[0]);
      continue;
    }
    if (nums.size() != 2) throw std::invalid_argument("edge list line " + std::to_string(lineno) + ": expected two vertices");
    es.push_back({static_cast<int>(nums[0]), static_cast<int>(nums[1])});
  }
  if (n < 0) throw std::invalid_argument("empty edge list");
  return Graph(n, std::move(es));
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.num_vertices() << "\n";
  for (const auto& e : g.edges()) os << e.u << " " << e.v << "\n";
  return os.str();
}

}  // namespace matchcx
