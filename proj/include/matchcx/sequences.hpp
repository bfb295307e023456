#pragma once

#include "matchcx/complex.hpp"
#include "matchcx/homology.hpp"
#include "matchcx/model_complex.hpp"
#include "matchcx/sparse_matrix.hpp"

#include <map>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

namespace matchcx {

enum class SequenceKind { Pair, Seq012, Seq034, Seq0356, Seq0e2, Seq0235 };

std::string to_string(SequenceKind k);
// "pair", "0-1-2", "0-3-4", "0-3-5-6", "0-e-2", "0-2-3-5".
SequenceKind parse_sequence_kind(const std::string& s);

// Default degrees [-1, floor((n-3)/2) + 1].
std::pair<int, int> default_window(int n);

// Long exact sequence ... -> H(N0) -f-> H(X) -g-> H(N2) -h-> H(N0)[-1] -> ...
// realised at chain level. The pair (X, A) underlies every instance:
//   alpha : N0 -> A   quasi-isomorphism onto the subcomplex (f = incl o alpha);
//   g     : X -> N2   projection onto the relative blocks;
//   delta : N2 -> A   d o lift, one degree down (anticommutes with d);
//   h     : N2 -> N0  one degree down, either an explicit formula or, when
//                     absent, alpha_*^{-1} o delta_* on homology.
// Maps are stored by source degree.
struct SequenceInstance {
  SequenceKind kind = SequenceKind::Pair;
  int n = 0;
  int lo = -1, hi = -1;
  std::string names[3];  // N0, X, N2

  MatchingComplex ambient;
  MatchingComplex sub;
  BlockComplex n0, x, n2, a;
  ChainComplex c0, cx, c2, ca;

  std::map<int, SparseIntMatrix> f, g, h, alpha, delta;
  bool explicit_h = false;
};

SequenceInstance pair_les(const ComplexPair& pair, int lo, int hi);
SequenceInstance seq_012(int n, std::optional<std::pair<int, int>> degrees = {});
SequenceInstance seq_034(int n, std::optional<std::pair<int, int>> degrees = {});
SequenceInstance seq_0356(int n, std::optional<std::pair<int, int>> degrees = {});
SequenceInstance seq_0e2(int n, std::optional<std::pair<int, int>> degrees = {});
SequenceInstance seq_0235(int n, std::optional<std::pair<int, int>> degrees = {});
SequenceInstance make_sequence(SequenceKind kind, int n, std::optional<std::pair<int, int>> degrees = {});

// Flips the sign of one entry of a stored map (test fixture for the harness).
void corrupt_map(SequenceInstance& s, const std::string& map, int degree);

struct MapCheck {
  std::string map;
  int degree = 0;
  bool ok = false;
};

struct FieldNodeCheck {
  std::size_t dimension = 0;
  std::size_t rank_in = 0;
  std::size_t rank_out = 0;
  bool composite_zero = false;
  bool exact = false;
};

struct NodeCheck {
  int node = 0;  // 0, 1, 2
  int degree = 0;
  GroupDescriptor group;  // over the report ring
  // Over Z, the composite is checked on integral cycle bases.
  bool composite_zero = false;
  std::map<std::string, FieldNodeCheck> fields;  // keyed by ring name
  std::optional<bool> exact_integral;
  bool exact() const;
};

struct ExactnessOptions {
  std::vector<std::uint32_t> primes{2, 3, 5, 7};
  bool exact_integral = false;
};

struct ExactnessReport {
  SequenceKind kind = SequenceKind::Pair;
  int n = 0;
  Ring ring;
  int lo = 0, hi = 0;
  std::vector<std::string> node_names;
  std::vector<MapCheck> chain_maps;
  // alpha_* invertible in each degree, and alpha_* h_* = delta_* when h is explicit.
  std::vector<MapCheck> homology_checks;
  std::vector<NodeCheck> nodes;
  bool passed() const;
  nlohmann::json to_json() const;
};

ExactnessReport verify_exactness(const SequenceInstance& s, const Ring& ring, const ExactnessOptions& opt = {});

// beta(n, d) = dim H_d(M_n; Z_3), alpha(n, d) = dim H_d(M_n \ e; Z_3).
struct InequalityRow {
  int n = 0;
  int d = 0;
  std::size_t beta = 0;
  std::size_t alpha = 0;
  std::size_t rhs1 = 0;  // alpha(n,d) + beta(n-2,d-1)
  std::size_t rhs2 = 0;  // beta(n-3,d-1) + 2 C(n-3,2) beta(n-5,d-2) + (n-3) alpha(n-2,d-1)
  bool first_holds() const { return beta <= rhs1; }
  bool second_holds() const { return alpha <= rhs2; }
};
std::vector<InequalityRow> inequality_report(int max_n);

// Each relative group H_d(D^i, D^{i-1}) for S = [m] next to the direct sum
// over pairs of sequences of <a_1 b_1 ^ ... ^ a_i b_i> (x) H_{d-i}(join),
// computed from one join per (A, B).
struct FiltrationRow {
  int n = 0, m = 0, i = 0, d = 0;
  GroupDescriptor relative;
  GroupDescriptor decomposition;
};
std::vector<FiltrationRow> filtration_consistency(int n, int m, const Ring& ring);

}  // namespace matchcx
