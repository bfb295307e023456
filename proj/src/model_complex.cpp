#include "matchcx/model_complex.hpp"

#include <stdexcept>

namespace matchcx {

Block make_block(Matching prefix, const MatchingComplex& inner) {
  Block b{std::move(prefix), {}};
  for (int d = -1; d <= inner.dimension(); ++d) {
    auto s = inner.simplices(d);
    b.cells.emplace_back(s.begin(), s.end());
  }
  return b;
}

Block relative_block(const ComplexPair& pair) {
  Block b;
  const auto& x = pair.ambient();
  for (int d = -1; d <= x.dimension(); ++d) {
    std::vector<Matching> level;
    for (const auto& m : x.simplices(d))
      if (!pair.sub().contains(m)) level.push_back(m);
    b.cells.push_back(std::move(level));
  }
  return b;
}

BlockComplex::BlockComplex(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
  for (std::size_t bi = 0; bi < blocks_.size(); ++bi) {
    const Block& b = blocks_[bi];
    const std::uint64_t pm = b.prefix.vertex_mask();
    for (std::size_t k = 0; k < b.cells.size(); ++k) {
      for (const auto& tau : b.cells[k]) {
        if (tau.vertex_mask() & pm) throw std::invalid_argument("inner cell meets the prefix");
        std::vector<Edge> es = b.prefix.edges;
        es.insert(es.end(), tau.edges.begin(), tau.edges.end());
        int sign = sort_sign(es);
        Matching full{std::move(es)};
        std::size_t slot = static_cast<std::size_t>(full.dimension() + 1);
        if (basis_.size() <= slot) {
          basis_.resize(slot + 1);
          index_.resize(slot + 1);
        }
        if (!index_[slot].emplace(full, basis_[slot].size()).second)
          throw std::invalid_argument("cell " + to_string(full) + " appears in two blocks");
        basis_[slot].push_back(Cell{bi, tau, std::move(full), sign});
      }
    }
  }
}

BlockComplex BlockComplex::whole(const MatchingComplex& k) {
  return BlockComplex({make_block(Matching{}, k)});
}

std::size_t BlockComplex::rank(int d) const {
  if (d < -1 || d > top()) return 0;
  return basis_[static_cast<std::size_t>(d + 1)].size();
}

Chain BlockComplex::embed(int d, std::size_t i) const {
  const Cell& c = cell(d, i);
  return Chain::simplex(c.full, c.sign);
}

SparseVector BlockComplex::coordinates(const Chain& c, bool strict) const {
  SparseVector v;
  if (c.is_zero()) return v;
  int d = c.dimension();
  const std::map<Matching, std::size_t>* idx = (d >= -1 && d <= top()) ? &index_[static_cast<std::size_t>(d + 1)] : nullptr;
  for (const auto& [m, coeff] : c.terms()) {
    auto it = idx ? idx->find(m) : std::map<Matching, std::size_t>::const_iterator{};
    if (!idx || it == idx->end()) {
      if (strict) throw std::invalid_argument("chain term " + to_string(m) + " has no cell");
      continue;
    }
    const Cell& cl = basis_[static_cast<std::size_t>(d + 1)][it->second];
    v.push_back({it->second, cl.sign < 0 ? Integer(-coeff) : coeff});
  }
  return normalize(std::move(v));
}

Chain BlockComplex::chain(int d, const SparseVector& v) const {
  Chain c(d);
  for (const auto& e : v) {
    const Cell& cl = cell(d, e.row);
    c.add_term(cl.full, cl.sign < 0 ? Integer(-e.value) : e.value);
  }
  return c;
}

ChainComplex BlockComplex::chain_complex() const {
  std::vector<std::size_t> ranks;
  std::vector<SparseIntMatrix> bs;
  for (int d = -1; d <= top(); ++d) {
    ranks.push_back(rank(d));
    SparseIntMatrix m(rank(d - 1), 0);
    for (std::size_t i = 0; i < rank(d); ++i) {
      const Cell& c = cell(d, i);
      const Block& b = blocks_[c.block];
      std::vector<MatrixEntry> col;
      const int lead = (b.prefix.edges.size() % 2) ? -1 : 1;
      for (std::size_t j = 0; j < c.inner.edges.size(); ++j) {
        Matching face = c.inner;
        face.edges.erase(face.edges.begin() + static_cast<long>(j));
        std::vector<Edge> es = b.prefix.edges;
        es.insert(es.end(), face.edges.begin(), face.edges.end());
        sort_sign(es);
        auto it = index_[static_cast<std::size_t>(d)].find(Matching{es});
        if (it == index_[static_cast<std::size_t>(d)].end()) continue;
        const Cell& fc = basis_[static_cast<std::size_t>(d)][it->second];
        if (fc.block != c.block) continue;
        int s = lead * (j % 2 ? -1 : 1);
        col.push_back({it->second, Integer(s)});
      }
      m.append_column(normalize(std::move(col)));
    }
    bs.push_back(std::move(m));
  }
  return ChainComplex(-1, std::move(ranks), std::move(bs));
}

}  // namespace matchcx
