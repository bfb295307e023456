#pragma once

#include "matchcx/chain.hpp"

#include <cstddef>
#include <vector>

namespace matchcx {

// One factor <n_i d_i> of a cycle type: a (d_i - 1)-cycle on n_i vertices.
struct CyclePart {
  int size = 0;
  int degree = 0;
  bool operator==(const CyclePart&) const = default;
};
using CycleType = std::vector<CyclePart>;

// (12 - 23) ^ (45 - 56) ^ ... ^ ((3r-2)(3r-1) - (3r-1)(3r)).
Chain gamma(int r);

// Fundamental cycle of M(K_{A,B}) with |A| = |B| + 1, normalised so the
// lexicographically first term has coefficient +1.
Chain bipartite_fundamental_cycle(const std::vector<int>& a, const std::vector<int>& b);

// z ^ (g shifted by shift); z must live on [shift].
Chain theta(const Chain& z, const Chain& g, int shift);

// Candidate cycles for one part on a block:
//   <m 0>: the unit; <3 1> on a<b<c: ab-bc, ab-ac, ac-bc;
//   <5 2>: the ten fundamental cycles of M(K_{block \ {a,b}, {a,b}}),
//          followed by an integer basis of the 1-cycles of M(K_block);
//   otherwise an integer basis of the (d-1)-cycles of M(K_block).
std::vector<Chain> part_generators(const CyclePart& part, const std::vector<int>& block);

Chain type_cycle(const CycleType& type, const std::vector<std::vector<int>>& blocks,
                 const std::vector<std::size_t>& choices);

// Ordered block choices (each block a colex-ordered subset of the unused
// vertices of [n]); vertices left over are unused. Generator choices vary
// fastest. At most cap cycles.
std::vector<Chain> enumerate_type_cycles(const CycleType& type, int n, std::size_t cap);

}  // namespace matchcx
