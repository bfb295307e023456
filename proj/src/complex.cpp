#include "matchcx/complex.hpp"

#include <algorithm>
#include <stdexcept>

namespace matchcx {

std::uint64_t Matching::vertex_mask() const {
  std::uint64_t m = 0;
  for (const auto& e : edges) m |= (1ULL << e.u) | (1ULL << e.v);
  return m;
}

bool Matching::covers(int v) const {
  return std::any_of(edges.begin(), edges.end(), [v](const Edge& e) { return e.contains(v); });
}

bool Matching::contains(const Edge& e) const { return std::binary_search(edges.begin(), edges.end(), e); }

Matching make_matching(std::vector<Edge> edges) {
  std::uint64_t mask = 0;
  for (auto& e : edges) {
    e = make_edge(e.u, e.v);
    if (e.v > kMaxVertices) throw std::invalid_argument("vertex out of range");
    std::uint64_t bits = (1ULL << e.u) | (1ULL << e.v);
    if (mask & bits) throw std::invalid_argument("edges share a vertex");
    mask |= bits;
  }
  std::sort(edges.begin(), edges.end());
  return Matching{std::move(edges)};
}

std::string to_string(const Matching& m) {
  if (m.edges.empty()) return "{}";
  std::string s = "{";
  for (std::size_t i = 0; i < m.edges.size(); ++i) {
    if (i) s += ",";
    s += to_string(m.edges[i]);
  }
  return s + "}";
}

namespace {

void enumerate(const std::vector<Edge>& es, std::size_t start, std::uint64_t used, Matching& cur,
               std::vector<std::vector<Matching>>& out) {
  std::size_t slot = cur.edges.size();
  if (out.size() <= slot) out.resize(slot + 1);
  out[slot].push_back(cur);
  for (std::size_t i = start; i < es.size(); ++i) {
    std::uint64_t bits = (1ULL << es[i].u) | (1ULL << es[i].v);
    if (used & bits) continue;
    cur.edges.push_back(es[i]);
    enumerate(es, i + 1, used | bits, cur, out);
    cur.edges.pop_back();
  }
}

constexpr std::uint64_t kFnvOffset = 1469598103934665603ULL;
constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

void fnv(std::uint64_t& h, std::uint64_t x) {
  for (int i = 0; i < 8; ++i) {
    h ^= (x >> (8 * i)) & 0xff;
    h *= kFnvPrime;
  }
}

}  // namespace

MatchingComplex MatchingComplex::of(const Graph& g) {
  MatchingComplex k;
  k.ground_ = g;
  Matching cur;
  enumerate(g.edges(), 0, 0, cur, k.cells_);
  for (auto& level : k.cells_) std::sort(level.begin(), level.end());
  return k;
}

MatchingComplex MatchingComplex::void_complex(const Graph& g) {
  MatchingComplex k;
  k.ground_ = g;
  return k;
}

MatchingComplex MatchingComplex::from_simplices(const Graph& g, std::vector<Matching> simplices) {
  MatchingComplex k;
  k.ground_ = g;
  for (auto& m : simplices) {
    m = make_matching(m.edges);
    for (const auto& e : m.edges)
      if (!g.has_edge(e.u, e.v)) throw std::invalid_argument("simplex " + to_string(m) + " uses a non-edge");
    std::size_t slot = m.edges.size();
    if (k.cells_.size() <= slot) k.cells_.resize(slot + 1);
    k.cells_[slot].push_back(std::move(m));
  }
  for (auto& level : k.cells_) {
    std::sort(level.begin(), level.end());
    level.erase(std::unique(level.begin(), level.end()), level.end());
  }
  for (std::size_t slot = 1; slot < k.cells_.size(); ++slot) {
    for (const auto& m : k.cells_[slot]) {
      for (std::size_t j = 0; j < m.edges.size(); ++j) {
        Matching face = m;
        face.edges.erase(face.edges.begin() + static_cast<long>(j));
        if (!std::binary_search(k.cells_[slot - 1].begin(), k.cells_[slot - 1].end(), face))
          throw std::invalid_argument("family is not downward closed at " + to_string(m));
      }
    }
  }
  return k;
}

std::span<const Matching> MatchingComplex::simplices(int d) const {
  if (d + 1 < 0 || d + 1 >= static_cast<int>(cells_.size())) return {};
  return cells_[d + 1];
}

std::optional<std::size_t> MatchingComplex::index_of(const Matching& m) const {
  auto level = simplices(m.dimension());
  auto it = std::lower_bound(level.begin(), level.end(), m);
  if (it == level.end() || *it != m) return std::nullopt;
  return static_cast<std::size_t>(it - level.begin());
}

std::size_t MatchingComplex::total_cells() const {
  std::size_t t = 0;
  for (const auto& level : cells_) t += level.size();
  return t;
}

std::uint64_t MatchingComplex::content_hash() const {
  if (hash_) return hash_;
  std::uint64_t h = kFnvOffset;
  fnv(h, static_cast<std::uint64_t>(ground_.num_vertices()));
  fnv(h, ground_.edges().size());
  for (const auto& e : ground_.edges()) fnv(h, (static_cast<std::uint64_t>(e.u) << 8) | e.v);
  fnv(h, cells_.size());
  for (const auto& level : cells_) {
    fnv(h, level.size());
    for (const auto& m : level)
      for (const auto& e : m.edges) fnv(h, (static_cast<std::uint64_t>(e.u) << 8) | e.v);
  }
  hash_ = h ? h : 1;
  return hash_;
}

MatchingComplex matching_complex(const Graph& g) { return MatchingComplex::of(g); }

MatchingComplex delete_zero_cell(const MatchingComplex& k, const Edge& e0) {
  Edge e = make_edge(e0.u, e0.v);
  if (!k.contains(Matching{{e}})) throw std::invalid_argument("edge " + to_string(e) + " is not a 0-cell");
  std::vector<Matching> keep;
  for (int d = -1; d <= k.dimension(); ++d)
    for (const auto& m : k.simplices(d))
      if (!m.contains(e)) keep.push_back(m);
  return MatchingComplex::from_simplices(k.ground(), std::move(keep));
}

MatchingComplex filtration_level(int n, int m, int i) {
  if (n < 2 || m < 1 || m > n - 1) throw std::invalid_argument("filtration needs 1 <= m <= n - 1");
  if (i < -1 || i > std::min(m, n - m)) throw std::invalid_argument("filtration level out of range");
  Graph g = complete_graph(n);
  if (i < 0) return MatchingComplex::void_complex(g);
  MatchingComplex full = MatchingComplex::of(g);
  std::vector<Matching> keep;
  for (int d = -1; d <= full.dimension(); ++d)
    for (const auto& s : full.simplices(d)) {
      int crossing = 0;
      for (const auto& e : s.edges)
        if (e.u <= m && e.v > m) ++crossing;
      if (crossing <= i) keep.push_back(s);
    }
  return MatchingComplex::from_simplices(g, std::move(keep));
}

MatchingComplex join(const MatchingComplex& a, const MatchingComplex& b, int offset) {
  Graph g = disjoint_union(a.ground(), b.ground(), offset);
  if (a.is_void() || b.is_void()) return MatchingComplex::void_complex(g);
  std::vector<Matching> cells;
  for (int da = -1; da <= a.dimension(); ++da)
    for (const auto& x : a.simplices(da))
      for (int db = -1; db <= b.dimension(); ++db)
        for (const auto& y : b.simplices(db)) {
          Matching m = x;
          for (const auto& e : y.edges) m.edges.push_back({e.u + offset, e.v + offset});
          std::sort(m.edges.begin(), m.edges.end());
          cells.push_back(std::move(m));
        }
  return MatchingComplex::from_simplices(g, std::move(cells));
}

std::vector<std::size_t> f_vector(const MatchingComplex& k) {
  if (k.is_void()) return {0};
  std::vector<std::size_t> f;
  for (int d = -1; d <= k.dimension(); ++d) f.push_back(k.count(d));
  return f;
}

ComplexPair::ComplexPair(MatchingComplex ambient, MatchingComplex sub)
    : ambient_(std::move(ambient)), sub_(std::move(sub)) {
  for (int d = -1; d <= sub_.dimension(); ++d)
    for (const auto& m : sub_.simplices(d))
      if (!ambient_.contains(m)) throw std::invalid_argument("subcomplex cell " + to_string(m) + " not in ambient");
}

}  // namespace matchcx
