#pragma once

#include "matchcx/chain.hpp"
#include "matchcx/complex.hpp"
#include "matchcx/homology.hpp"
#include "matchcx/sparse_matrix.hpp"

#include <map>
#include <vector>

namespace matchcx {

// <prefix> (x) C(inner): the cells prefix ^ tau for tau in a family of
// matchings disjoint from the prefix. The family need not be downward
// closed; faces outside it are dropped by the boundary, as in a quotient.
struct Block {
  Matching prefix;
  std::vector<std::vector<Matching>> cells;  // cells[k + 1] holds inner k-cells
};

Block make_block(Matching prefix, const MatchingComplex& inner);
// Cells of the ambient complex missing from the subcomplex, empty prefix.
Block relative_block(const ComplexPair& pair);

// Direct sum of blocks, graded by total dimension |prefix| + dim(tau), with
// boundary (-1)^{|prefix|} prefix (x) d(tau). Every cell is identified with
// the matching prefix u tau, which must be unique across blocks.
class BlockComplex {
 public:
  struct Cell {
    std::size_t block = 0;
    Matching inner;
    Matching full;
    int sign = 1;  // prefix ^ inner = sign * full
  };

  BlockComplex() = default;
  explicit BlockComplex(std::vector<Block> blocks);
  static BlockComplex whole(const MatchingComplex& k);

  const std::vector<Block>& blocks() const { return blocks_; }
  int top() const { return static_cast<int>(basis_.size()) - 2; }
  std::size_t rank(int d) const;
  const Cell& cell(int d, std::size_t i) const { return basis_.at(static_cast<std::size_t>(d + 1)).at(i); }

  // prefix ^ inner as a chain of the ambient complex.
  Chain embed(int d, std::size_t i) const;
  // Coordinates of an ambient chain. Terms with no cell are dropped, or
  // rejected when strict.
  SparseVector coordinates(const Chain& c, bool strict) const;
  // Inverse of coordinates.
  Chain chain(int d, const SparseVector& v) const;
  ChainComplex chain_complex() const;

 private:
  std::vector<Block> blocks_;
  std::vector<std::vector<Cell>> basis_;                    // basis_[d + 1]
  std::vector<std::map<Matching, std::size_t>> index_;      // by full matching
};

}  // namespace matchcx
