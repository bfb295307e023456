#include "matchcx/homology.hpp"

#include "matchcx/field.hpp"
#include "matchcx/snf.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace matchcx {

Ring Ring::mod(std::uint32_t p) {
  ModPField check(p);
  (void)check;
  return {RingKind::ModP, p};
}

Ring Ring::parse(const std::string& s) {
  if (s == "Z") return integers();
  if (s == "Q") return rationals();
  if (s.rfind("Zp:", 0) == 0) {
    std::size_t pos = 0;
    unsigned long p = 0;
    try {
      p = std::stoul(s.substr(3), &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad ring '" + s + "'");
    }
    if (pos != s.size() - 3) throw std::invalid_argument("bad ring '" + s + "'");
    return mod(static_cast<std::uint32_t>(p));
  }
  throw std::invalid_argument("unknown ring '" + s + "' (use Z, Q or Zp:<p>)");
}

std::string Ring::name() const {
  switch (kind) {
    case RingKind::Integers: return "Z";
    case RingKind::Rationals: return "Q";
    case RingKind::ModP: return "Zp:" + std::to_string(p);
  }
  return "?";
}

std::string GroupDescriptor::to_string() const {
  if (is_zero()) return "0";
  std::vector<std::string> parts;
  if (free_rank == 1) parts.push_back("Z");
  if (free_rank > 1) parts.push_back("Z^" + std::to_string(free_rank));
  for (std::size_t i = 0; i < torsion.size();) {
    std::size_t j = i;
    while (j < torsion.size() && torsion[j] == torsion[i]) ++j;
    std::string s = "Z_" + torsion[i].get_str();
    if (j - i > 1) s += "^" + std::to_string(j - i);
    parts.push_back(s);
    i = j;
  }
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " + " : "") + parts[i];
  return out;
}

GroupDescriptor make_group(std::size_t free_rank, std::vector<Integer> torsion) {
  return direct_sum({GroupDescriptor{free_rank, std::move(torsion)}});
}

GroupDescriptor direct_sum(const std::vector<GroupDescriptor>& parts) {
  GroupDescriptor g;
  std::vector<Integer> factors;
  for (const auto& p : parts) {
    g.free_rank += p.free_rank;
    for (const auto& t : p.torsion) {
      if (t < 0) throw std::invalid_argument("negative torsion coefficient");
      if (t == 0) {
        ++g.free_rank;
        continue;
      }
      if (t > 1) factors.push_back(t);
    }
  }
  if (factors.empty()) return g;
  std::size_t n = factors.size();
  DenseIntMatrix d(n, std::vector<Integer>(n, 0));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = factors[i];
  for (const auto& f : dense_smith_normal_form(std::move(d), n, false).invariant_factors)
    if (f > 1) g.torsion.push_back(f);
  return g;
}

TorsionPrimes torsion_primes(const GroupDescriptor& g, std::uint32_t trial_bound) {
  TorsionPrimes out;
  std::vector<Integer> primes;
  for (Integer t : g.torsion) {
    for (std::uint32_t q = 2; q <= trial_bound && t > 1; ++q) {
      if (!mpz_divisible_ui_p(t.get_mpz_t(), q)) continue;
      primes.push_back(Integer(q));
      while (mpz_divisible_ui_p(t.get_mpz_t(), q)) t /= q;
    }
    if (t > 1) {
      if (mpz_probab_prime_p(t.get_mpz_t(), 30))
        primes.push_back(t);
      else
        out.complete = false;
    }
  }
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  out.primes = std::move(primes);
  return out;
}

ChainComplex::ChainComplex(int lowest, std::vector<std::size_t> ranks, std::vector<SparseIntMatrix> boundaries)
    : lowest_(lowest), ranks_(std::move(ranks)), boundaries_(std::move(boundaries)) {
  if (boundaries_.size() != ranks_.size()) throw std::invalid_argument("one boundary matrix per degree expected");
  for (std::size_t k = 0; k < ranks_.size(); ++k) {
    std::size_t below = k ? ranks_[k - 1] : 0;
    if (boundaries_[k].cols() != ranks_[k] || boundaries_[k].rows() != below)
      throw std::invalid_argument("boundary matrix has the wrong shape");
  }
}

std::size_t ChainComplex::rank(int d) const {
  if (d < lowest_ || d > top()) return 0;
  return ranks_[static_cast<std::size_t>(d - lowest_)];
}

SparseIntMatrix ChainComplex::boundary(int d) const {
  if (d < lowest_ || d > top()) return SparseIntMatrix(rank(d - 1), rank(d));
  return boundaries_[static_cast<std::size_t>(d - lowest_)];
}

std::uint64_t ChainComplex::fingerprint() const {
  if (fp_) return fp_;
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xff;
      h *= 1099511628211ULL;
    }
  };
  mix(static_cast<std::uint64_t>(lowest_ + 1000));
  mix(ranks_.size());
  for (auto r : ranks_) mix(r);
  for (const auto& b : boundaries_)
    for (std::size_t c = 0; c < b.cols(); ++c) {
      mix(c);
      for (const auto& e : b.column(c)) {
        mix(e.row);
        mix(static_cast<std::uint64_t>(mpz_get_si(e.value.get_mpz_t())));
      }
    }
  fp_ = h ? h : 1;
  return fp_;
}

ChainComplex chain_complex(const MatchingComplex& k) {
  std::vector<std::size_t> ranks;
  std::vector<SparseIntMatrix> bs;
  for (int d = -1; d <= k.dimension(); ++d) {
    ranks.push_back(k.count(d));
    bs.push_back(boundary_matrix(k, d));
  }
  return ChainComplex(-1, std::move(ranks), std::move(bs));
}

ChainComplex relative_chain_complex(const ComplexPair& pair) {
  const auto& x = pair.ambient();
  const auto& a = pair.sub();
  std::vector<std::size_t> ranks;
  std::vector<SparseIntMatrix> bs;
  std::vector<std::vector<Matching>> cells;
  for (int d = -1; d <= x.dimension(); ++d) {
    std::vector<Matching> level;
    for (const auto& m : x.simplices(d))
      if (!a.contains(m)) level.push_back(m);
    cells.push_back(std::move(level));
  }
  for (std::size_t k = 0; k < cells.size(); ++k) {
    ranks.push_back(cells[k].size());
    SparseIntMatrix b(k ? cells[k - 1].size() : 0, 0);
    for (const auto& m : cells[k]) {
      std::vector<MatrixEntry> col;
      if (k)
        for (std::size_t j = 0; j < m.edges.size(); ++j) {
          Matching face = m;
          face.edges.erase(face.edges.begin() + static_cast<long>(j));
          auto& below = cells[k - 1];
          auto it = std::lower_bound(below.begin(), below.end(), face);
          if (it != below.end() && *it == face)
            col.push_back({static_cast<std::size_t>(it - below.begin()), Integer(j % 2 ? -1 : 1)});
        }
      b.append_column(std::move(col));
    }
    bs.push_back(std::move(b));
  }
  return ChainComplex(-1, std::move(ranks), std::move(bs));
}

namespace {

using MemoKey = std::tuple<std::uint64_t, int, int, std::uint32_t>;
std::mutex memo_mutex;
std::map<MemoKey, BoundaryData> memo;

}  // namespace

namespace {

template <class Thunk>
BoundaryData keyed_boundary_data(std::uint64_t id, int d, const Ring& ring, Thunk make) {
  MemoKey key{id, d, static_cast<int>(ring.kind), ring.p};
  {
    std::lock_guard lock(memo_mutex);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  SparseIntMatrix b = make();
  BoundaryData out;
  switch (ring.kind) {
    case RingKind::Integers: {
      SnfResult s = smith_normal_form(b);
      out.rank = s.rank;
      out.torsion = s.torsion();
      break;
    }
    case RingKind::Rationals: out.rank = rank_rational(b); break;
    case RingKind::ModP: out.rank = rank_mod_p(b, ring.p); break;
  }
  std::lock_guard lock(memo_mutex);
  memo.emplace(key, out);
  return out;
}

std::uint64_t complex_id(const MatchingComplex& k) { return k.content_hash() * 0x9e3779b97f4a7c15ULL + 17; }

BoundaryData complex_boundary_data(const MatchingComplex& k, int d, const Ring& ring) {
  return keyed_boundary_data(complex_id(k), d, ring, [&] {
    if (d < -1 || d > k.dimension()) return SparseIntMatrix(k.count(d - 1), k.count(d));
    return boundary_matrix(k, d);
  });
}

}  // namespace

BoundaryData boundary_data(const ChainComplex& c, int d, const Ring& ring) {
  return keyed_boundary_data(c.fingerprint(), d, ring, [&] { return c.boundary(d); });
}

void clear_homology_memo() {
  std::lock_guard lock(memo_mutex);
  memo.clear();
}

std::size_t homology_memo_size() {
  std::lock_guard lock(memo_mutex);
  return memo.size();
}

GroupDescriptor homology(const ChainComplex& c, int d, const Ring& ring) {
  std::size_t n = c.rank(d);
  if (n == 0) return {};
  BoundaryData out = boundary_data(c, d, ring);
  BoundaryData in = boundary_data(c, d + 1, ring);
  GroupDescriptor g;
  g.free_rank = n - out.rank - in.rank;
  if (ring.kind == RingKind::Integers) g.torsion = in.torsion;
  return g;
}

GroupDescriptor homology(const MatchingComplex& k, int d, const Ring& ring) {
  if (d < -1 || d > k.dimension()) return {};
  BoundaryData out = complex_boundary_data(k, d, ring);
  BoundaryData in = complex_boundary_data(k, d + 1, ring);
  GroupDescriptor g;
  g.free_rank = k.count(d) - out.rank - in.rank;
  if (ring.kind == RingKind::Integers) g.torsion = in.torsion;
  return g;
}

GroupDescriptor relative_homology(const ComplexPair& pair, int d, const Ring& ring) {
  return homology(relative_chain_complex(pair), d, ring);
}

std::optional<Integer> class_order(const MatchingComplex& k, int d, const Chain& z) {
  if (z.dimension() != d && !z.is_zero()) throw std::invalid_argument("chain dimension differs from degree");
  if (!is_cycle(k, z)) throw std::invalid_argument("chain is not a cycle");
  SparseIntMatrix b = d + 1 <= k.dimension() ? boundary_matrix(k, d + 1) : SparseIntMatrix(k.count(d), 0);
  return cokernel_orders(b, {to_vector(k, z)}).front();
}

GenerationReport generation_report(const MatchingComplex& k, int d, const std::vector<Chain>& cycles, const Ring& ring) {
  std::vector<SparseVector> vs;
  for (const auto& z : cycles) {
    if (!z.is_zero() && z.dimension() != d) throw std::invalid_argument("chain dimension differs from degree");
    if (!is_cycle(k, z)) throw std::invalid_argument("chain is not a cycle");
    vs.push_back(to_vector(k, z));
  }
  SparseIntMatrix a = d + 1 <= k.dimension() ? boundary_matrix(k, d + 1) : SparseIntMatrix(k.count(d), 0);
  SparseIntMatrix zs(k.count(d), 0);
  for (auto& v : vs) zs.append_column(std::move(v));
  a = a.hconcat(zs);
  GenerationReport rep;
  rep.cycle_rank = k.count(d) - complex_boundary_data(k, d, ring).rank;
  switch (ring.kind) {
    case RingKind::Integers: {
      SnfResult s = smith_normal_form(a);
      rep.span_rank = s.rank;
      if (s.rank == rep.cycle_rank) {
        rep.index = 1;
        for (const auto& f : s.invariant_factors) rep.index *= f;
      }
      rep.generates = rep.index == 1;
      break;
    }
    case RingKind::Rationals: rep.span_rank = rank_rational(a); break;
    case RingKind::ModP: rep.span_rank = rank_mod_p(a, ring.p); break;
  }
  if (ring.is_field()) rep.generates = rep.span_rank == rep.cycle_rank;
  return rep;
}

bool classes_generate(const MatchingComplex& k, int d, const std::vector<Chain>& cycles, const Ring& ring) {
  return generation_report(k, d, cycles, ring).generates;
}

UctCheck uct_dimension_check(const MatchingComplex& k, int d, std::uint32_t p) {
  UctCheck u;
  u.mod_p_dimension = homology(k, d, Ring::mod(p)).free_rank;
  GroupDescriptor hd = homology(k, d, Ring::integers());
  GroupDescriptor hd1 = homology(k, d - 1, Ring::integers());
  u.predicted = hd.free_rank;
  for (const auto& t : hd.torsion)
    if (mpz_divisible_ui_p(t.get_mpz_t(), p)) ++u.predicted;
  for (const auto& t : hd1.torsion)
    if (mpz_divisible_ui_p(t.get_mpz_t(), p)) ++u.predicted;
  return u;
}

}  // namespace matchcx
