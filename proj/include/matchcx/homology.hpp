#pragma once

#include "matchcx/chain.hpp"
#include "matchcx/complex.hpp"
#include "matchcx/integer.hpp"
#include "matchcx/sparse_matrix.hpp"

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace matchcx {

enum class RingKind { Integers, Rationals, ModP };

struct Ring {
  RingKind kind = RingKind::Integers;
  std::uint32_t p = 0;

  static Ring integers() { return {}; }
  static Ring rationals() { return {RingKind::Rationals, 0}; }
  static Ring mod(std::uint32_t p);
  // "Z", "Q" or "Zp:<p>".
  static Ring parse(const std::string& s);
  std::string name() const;
  bool is_field() const { return kind != RingKind::Integers; }
  auto operator<=>(const Ring&) const = default;
};

// Finitely generated abelian group Z^r + Z_{d1} + ... with d1 | d2 | ...
struct GroupDescriptor {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;

  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  // "0", "Z", "Z^4", "Z^42 + Z_3^8", ... Runs of equal factors use an exponent.
  std::string to_string() const;
  bool operator==(const GroupDescriptor&) const = default;
};

GroupDescriptor make_group(std::size_t free_rank, std::vector<Integer> torsion = {});
// Canonical form of the direct sum.
GroupDescriptor direct_sum(const std::vector<GroupDescriptor>& parts);

struct TorsionPrimes {
  std::vector<Integer> primes;
  bool complete = true;  // false if a cofactor above the trial bound stayed unfactored
};
TorsionPrimes torsion_primes(const GroupDescriptor& g, std::uint32_t trial_bound = 1000000);

// Free chain complex given by its boundary matrices. C_d lives at
// ranks[d - lowest]; boundaries[k] is the map out of C_{lowest + k}.
class ChainComplex {
 public:
  ChainComplex() = default;
  ChainComplex(int lowest, std::vector<std::size_t> ranks, std::vector<SparseIntMatrix> boundaries);

  int lowest() const { return lowest_; }
  int top() const { return lowest_ + static_cast<int>(ranks_.size()) - 1; }
  std::size_t rank(int d) const;
  // d_d : C_d -> C_{d - 1}, correctly shaped zero outside the stored range.
  SparseIntMatrix boundary(int d) const;
  std::uint64_t fingerprint() const;

 private:
  int lowest_ = -1;
  std::vector<std::size_t> ranks_;
  std::vector<SparseIntMatrix> boundaries_;
  mutable std::uint64_t fp_ = 0;
};

ChainComplex chain_complex(const MatchingComplex& k);
// Cells of the ambient complex outside the subcomplex.
ChainComplex relative_chain_complex(const ComplexPair& pair);

GroupDescriptor homology(const ChainComplex& c, int d, const Ring& ring);
GroupDescriptor homology(const MatchingComplex& k, int d, const Ring& ring);
GroupDescriptor relative_homology(const ComplexPair& pair, int d, const Ring& ring);

// Rank of d_d over the ring and, over Z, its invariant factors. Memoised.
struct BoundaryData {
  std::size_t rank = 0;
  std::vector<Integer> torsion;
};
BoundaryData boundary_data(const ChainComplex& c, int d, const Ring& ring);
void clear_homology_memo();
std::size_t homology_memo_size();

// Order of [z] in H_d(K; Z); nullopt for infinite order. Throws unless z is a d-cycle of K.
std::optional<Integer> class_order(const MatchingComplex& k, int d, const Chain& z);

struct GenerationReport {
  bool generates = false;
  std::size_t cycle_rank = 0;   // rank of Z_d (over the ring)
  std::size_t span_rank = 0;    // rank of span(B_d, cycles)
  // Over Z with equal ranks: index of the span in Z_d. Zero otherwise.
  Integer index = 0;
};
GenerationReport generation_report(const MatchingComplex& k, int d, const std::vector<Chain>& cycles, const Ring& ring);
bool classes_generate(const MatchingComplex& k, int d, const std::vector<Chain>& cycles, const Ring& ring);

struct UctCheck {
  std::size_t mod_p_dimension = 0;
  std::size_t predicted = 0;
  bool holds() const { return mod_p_dimension == predicted; }
};
UctCheck uct_dimension_check(const MatchingComplex& k, int d, std::uint32_t p);

}  // namespace matchcx
