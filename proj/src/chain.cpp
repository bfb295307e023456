#include "matchcx/chain.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace matchcx {

Chain Chain::unit() {
  Chain c(-1);
  c.add_term(Matching{}, 1);
  return c;
}

Chain Chain::simplex(const Matching& m, const Integer& coeff) {
  Chain c(m.dimension());
  c.add_term(make_matching(m.edges), coeff);
  return c;
}

int sort_sign(std::vector<Edge>& edges) {
  int sign = 1;
  for (std::size_t i = 1; i < edges.size(); ++i)
    for (std::size_t j = i; j > 0 && edges[j] < edges[j - 1]; --j) {
      std::swap(edges[j], edges[j - 1]);
      sign = -sign;
    }
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) return 0;
  return sign;
}

Chain Chain::oriented(std::vector<Edge> edges, const Integer& coeff) {
  for (auto& e : edges) e = make_edge(e.u, e.v);
  Chain c(static_cast<int>(edges.size()) - 1);
  int s = sort_sign(edges);
  if (s == 0) throw std::invalid_argument("repeated edge in oriented simplex");
  c.add_term(make_matching(std::move(edges)), s * coeff);
  return c;
}

Integer Chain::coefficient(const Matching& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

std::uint64_t Chain::vertex_mask() const {
  std::uint64_t m = 0;
  for (const auto& [s, v] : terms_) m |= s.vertex_mask();
  return m;
}

void Chain::add_term(const Matching& m, const Integer& coeff) {
  if (m.dimension() != dim_) throw std::invalid_argument("term dimension mismatch");
  if (coeff == 0) return;
  auto [it, fresh] = terms_.try_emplace(m, coeff);
  if (!fresh) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Chain& Chain::operator+=(const Chain& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) dim_ = o.dim_;
  for (const auto& [m, v] : o.terms_) add_term(m, v);
  return *this;
}

Chain& Chain::operator-=(const Chain& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) dim_ = o.dim_;
  for (const auto& [m, v] : o.terms_) add_term(m, -v);
  return *this;
}

Chain& Chain::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Chain Chain::reduced_mod(std::uint32_t p) const {
  if (p < 2) throw std::invalid_argument("modulus must be at least 2");
  Chain out(dim_);
  Integer mod(p);
  for (const auto& [m, v] : terms_) {
    Integer r = v % mod;
    if (r < 0) r += mod;
    out.add_term(m, r);
  }
  return out;
}

SparseIntMatrix boundary_matrix(const MatchingComplex& k, int d) {
  if (d < -1) throw std::invalid_argument("boundary degree below -1");
  auto cols = k.simplices(d);
  auto rowcells = k.simplices(d - 1);
  SparseIntMatrix m(rowcells.size(), 0);
  for (const auto& s : cols) {
    std::vector<MatrixEntry> col;
    for (std::size_t j = 0; j < s.edges.size(); ++j) {
      Matching face = s;
      face.edges.erase(face.edges.begin() + static_cast<long>(j));
      auto it = std::lower_bound(rowcells.begin(), rowcells.end(), face);
      if (it == rowcells.end() || *it != face) throw std::logic_error("complex not downward closed");
      col.push_back({static_cast<std::size_t>(it - rowcells.begin()), Integer(j % 2 ? -1 : 1)});
    }
    m.append_column(std::move(col));
  }
  return m;
}

Chain boundary(const Chain& c) {
  Chain out(c.dimension() - 1);
  if (c.dimension() < 0) return Chain(-2);
  for (const auto& [s, v] : c.terms()) {
    for (std::size_t j = 0; j < s.edges.size(); ++j) {
      Matching face = s;
      face.edges.erase(face.edges.begin() + static_cast<long>(j));
      out.add_term(face, j % 2 ? -v : v);
    }
  }
  return out;
}

Chain apply_boundary(const MatchingComplex& k, const Chain& c) {
  for (const auto& [s, v] : c.terms())
    if (!k.contains(s)) throw std::invalid_argument("chain term " + to_string(s) + " not in complex");
  return boundary(c);
}

bool is_cycle(const MatchingComplex& k, const Chain& c) { return apply_boundary(k, c).is_zero(); }

Chain wedge(const Chain& a, const Chain& b) {
  if (a.vertex_mask() & b.vertex_mask()) throw std::invalid_argument("wedge of chains with overlapping supports");
  Chain out(a.dimension() + b.dimension() + 1);
  for (const auto& [x, u] : a.terms())
    for (const auto& [y, v] : b.terms()) {
      std::size_t inv = 0;
      for (const auto& e : x.edges)
        for (const auto& f : y.edges)
          if (f < e) ++inv;
      Matching m = x;
      m.edges.insert(m.edges.end(), y.edges.begin(), y.edges.end());
      std::sort(m.edges.begin(), m.edges.end());
      Integer c = u * v;
      out.add_term(m, inv % 2 ? -c : c);
    }
  return out;
}

Chain relabel(const Chain& c, const std::vector<int>& map) {
  Chain out(c.dimension());
  std::uint64_t image = 0;
  std::uint64_t support = c.vertex_mask();
  for (int v = 1; v < static_cast<int>(map.size()) && v <= kMaxVertices; ++v) {
    if (!(support & (1ULL << v))) continue;
    if (map[v] < 1 || map[v] > kMaxVertices) throw std::invalid_argument("vertex map out of range");
    if (image & (1ULL << map[v])) throw std::invalid_argument("vertex map not injective on support");
    image |= 1ULL << map[v];
  }
  for (int v = 1; v <= kMaxVertices; ++v)
    if ((support & (1ULL << v)) && v >= static_cast<int>(map.size()))
      throw std::invalid_argument("vertex map does not cover the support");
  for (const auto& [s, val] : c.terms()) {
    std::vector<Edge> es;
    for (const auto& e : s.edges) es.push_back(make_edge(map[e.u], map[e.v]));
    int sign = sort_sign(es);
    out.add_term(Matching{std::move(es)}, sign * val);
  }
  return out;
}

Chain shift(const Chain& c, int offset) {
  std::vector<int> map(kMaxVertices + 1);
  for (int v = 0; v <= kMaxVertices; ++v) map[v] = v + offset;
  return relabel(c, map);
}

SparseVector to_vector(const MatchingComplex& k, const Chain& c) {
  SparseVector v;
  for (const auto& [s, val] : c.terms()) {
    auto idx = k.index_of(s);
    if (!idx) throw std::invalid_argument("chain term " + to_string(s) + " not in complex");
    v.push_back({*idx, val});
  }
  return normalize(std::move(v));
}

Chain from_vector(const MatchingComplex& k, int d, const SparseVector& v) {
  Chain c(d);
  auto cells = k.simplices(d);
  for (const auto& e : v) c.add_term(cells[e.row], e.value);
  return c;
}

Chain parse_chain(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::optional<Chain> out;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto p = line.find('#'); p != std::string::npos) line.resize(p);
    std::istringstream ls(line);
    std::string coeff;
    if (!(ls >> coeff)) continue;
    Integer c;
    if (c.set_str(coeff, 10) != 0) throw std::invalid_argument("chain line " + std::to_string(lineno) + ": bad coefficient");
    std::string rest;
    std::getline(ls, rest);
    std::vector<Edge> es;
    if (rest.find("{}") == std::string::npos) {
      std::istringstream rs(rest);
      std::string tok;
      std::vector<int> cur;
      auto flush = [&]() {
        if (cur.size() != 2) throw std::invalid_argument("chain line " + std::to_string(lineno) + ": edges need two vertices");
        es.push_back(make_edge(cur[0], cur[1]));
        cur.clear();
      };
      while (rs >> tok) {
        if (tok == "|") {
          flush();
          continue;
        }
        try {
          cur.push_back(std::stoi(tok));
        } catch (const std::exception&) {
          throw std::invalid_argument("chain line " + std::to_string(lineno) + ": bad vertex '" + tok + "'");
        }
      }
      flush();
    }
    Chain term = Chain::oriented(es, c);
    if (!out) out = Chain(term.dimension());
    if (out->dimension() != term.dimension()) throw std::invalid_argument("chain terms have mixed dimensions");
    *out += term;
  }
  if (!out) throw std::invalid_argument("empty chain");
  return *out;
}

std::string format_chain(const Chain& c) {
  std::ostringstream os;
  for (const auto& [s, v] : c.terms()) {
    os << v.get_str() << " ";
    if (s.edges.empty()) os << " {}";
    for (std::size_t i = 0; i < s.edges.size(); ++i) os << (i ? " | " : " ") << s.edges[i].u << " " << s.edges[i].v;
    os << "\n";
  }
  return os.str();
}

}  // namespace matchcx
