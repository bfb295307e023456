#pragma once

#include "matchcx/graph.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace matchcx {

// A set of pairwise disjoint edges, kept sorted. Dimension is |edges| - 1,
// so the empty matching is the (-1)-cell.
struct Matching {
  std::vector<Edge> edges;

  int dimension() const { return static_cast<int>(edges.size()) - 1; }
  std::uint64_t vertex_mask() const;
  bool covers(int v) const;
  bool contains(const Edge& e) const;
  auto operator<=>(const Matching&) const = default;
};

// Sorts and validates; throws if two edges share a vertex.
Matching make_matching(std::vector<Edge> edges);
std::string to_string(const Matching& m);

// Downward-closed family of matchings of a ground graph, listed per
// dimension in lexicographic order. The void complex has no cells at all.
class MatchingComplex {
 public:
  MatchingComplex() = default;

  // All matchings of g.
  static MatchingComplex of(const Graph& g);
  static MatchingComplex void_complex(const Graph& g);
  // Throws unless the family is downward closed and made of matchings of g.
  static MatchingComplex from_simplices(const Graph& g, std::vector<Matching> simplices);

  const Graph& ground() const { return ground_; }
  bool is_void() const { return cells_.empty(); }
  // Largest d with a d-simplex; -2 for the void complex.
  int dimension() const { return static_cast<int>(cells_.size()) - 2; }
  std::span<const Matching> simplices(int d) const;
  std::size_t count(int d) const { return simplices(d).size(); }
  std::optional<std::size_t> index_of(const Matching& m) const;
  bool contains(const Matching& m) const { return index_of(m).has_value(); }
  std::size_t total_cells() const;
  std::uint64_t content_hash() const;

  bool operator==(const MatchingComplex& o) const { return ground_ == o.ground_ && cells_ == o.cells_; }

 private:
  Graph ground_;
  std::vector<std::vector<Matching>> cells_;  // cells_[d + 1]
  mutable std::uint64_t hash_ = 0;
};

MatchingComplex matching_complex(const Graph& g);
// Removes every simplex containing the 0-cell e.
MatchingComplex delete_zero_cell(const MatchingComplex& k, const Edge& e);
// Matchings of K_n with at most i edges between [m] and [m+1, n].
MatchingComplex filtration_level(int n, int m, int i);
// X_1 * X_2 with X_2 shifted by offset; vertex supports must be disjoint.
MatchingComplex join(const MatchingComplex& a, const MatchingComplex& b, int offset);
// Entry d + 1 counts d-simplices; the void complex gives {0}.
std::vector<std::size_t> f_vector(const MatchingComplex& k);

// Pair (X, A) of matching complexes with A a subcomplex of X.
class ComplexPair {
 public:
  ComplexPair(MatchingComplex ambient, MatchingComplex sub);
  const MatchingComplex& ambient() const { return ambient_; }
  const MatchingComplex& sub() const { return sub_; }

 private:
  MatchingComplex ambient_;
  MatchingComplex sub_;
};

}  // namespace matchcx
