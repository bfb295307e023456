#pragma once

#include "matchcx/complex.hpp"
#include "matchcx/integer.hpp"
#include "matchcx/sparse_matrix.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace matchcx {

// Finite formal sum of d-dimensional oriented matchings. Each simplex is
// stored in canonical (sorted) edge order.
class Chain {
 public:
  explicit Chain(int dimension = -1) : dim_(dimension) {}

  // The empty matching with coefficient 1.
  static Chain unit();
  static Chain simplex(const Matching& m, const Integer& coeff = 1);
  // e_0 ^ e_1 ^ ... in the given order, re-signed into canonical order.
  static Chain oriented(std::vector<Edge> edges, const Integer& coeff = 1);

  int dimension() const { return dim_; }
  const std::map<Matching, Integer>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(const Matching& m) const;
  std::uint64_t vertex_mask() const;

  void add_term(const Matching& m, const Integer& coeff);

  Chain& operator+=(const Chain& o);
  Chain& operator-=(const Chain& o);
  Chain& operator*=(const Integer& c);
  friend Chain operator+(Chain a, const Chain& b) { return a += b; }
  friend Chain operator-(Chain a, const Chain& b) { return a -= b; }
  friend Chain operator-(Chain a) { return a *= Integer(-1); }
  friend Chain operator*(const Integer& c, Chain a) { return a *= c; }
  bool operator==(const Chain& o) const { return dim_ == o.dim_ && terms_ == o.terms_; }

  // Coefficients replaced by their residues in [0, p).
  Chain reduced_mod(std::uint32_t p) const;

 private:
  int dim_;
  std::map<Matching, Integer> terms_;
};

// Sign of the permutation sorting the edge sequence; 0 if edges repeat.
int sort_sign(std::vector<Edge>& edges);

// Boundary d-chains -> (d-1)-chains, rows indexed by K_{d-1}, columns by K_d.
SparseIntMatrix boundary_matrix(const MatchingComplex& k, int d);
Chain boundary(const Chain& c);
// Same as boundary but checks that the chain is supported on K.
Chain apply_boundary(const MatchingComplex& k, const Chain& c);
bool is_cycle(const MatchingComplex& k, const Chain& c);

// Vertex supports must be disjoint. Dimension d1 + d2 + 1.
Chain wedge(const Chain& a, const Chain& b);
// Vertex map f(v) = map[v] (map[0] unused); must be injective on the support.
Chain relabel(const Chain& c, const std::vector<int>& map);
Chain shift(const Chain& c, int offset);

// Coefficient vector of c in the basis K_d.
SparseVector to_vector(const MatchingComplex& k, const Chain& c);
Chain from_vector(const MatchingComplex& k, int d, const SparseVector& v);

// Text form: one term per line, "coeff  u v | u v | ...". The unit is "coeff  {}".
Chain parse_chain(const std::string& text);
std::string format_chain(const Chain& c);

}  // namespace matchcx
