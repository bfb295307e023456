#include "matchcx/cycles.hpp"

#include "matchcx/snf.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace matchcx {

Chain gamma(int r) {
  if (r < 1) throw std::invalid_argument("gamma needs r >= 1");
  Chain g = Chain::unit();
  for (int i = 0; i < r; ++i) {
    int a = 3 * i + 1;
    Chain f = Chain::oriented({{a, a + 1}}) - Chain::oriented({{a + 1, a + 2}});
    g = wedge(g, f);
  }
  return g;
}

Chain bipartite_fundamental_cycle(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size() + 1) throw std::invalid_argument("fundamental cycle needs |A| = |B| + 1");
  std::uint64_t ma = 0, mb = 0;
  for (int v : a) ma |= 1ULL << v;
  for (int v : b) mb |= 1ULL << v;
  if ((ma & mb) || std::popcount(ma) != static_cast<int>(a.size()) || std::popcount(mb) != static_cast<int>(b.size()))
    throw std::invalid_argument("A and B must be disjoint sets");
  if (b.empty()) return Chain::unit();

  // Maximal matchings: injections B -> A.
  std::vector<int> bs = b;
  std::sort(bs.begin(), bs.end());
  std::vector<Matching> facets;
  std::vector<int> img(bs.size());
  std::vector<char> used(a.size(), 0);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == bs.size()) {
      std::vector<Edge> es;
      for (std::size_t k = 0; k < bs.size(); ++k) es.push_back(make_edge(bs[k], img[k]));
      facets.push_back(make_matching(std::move(es)));
      return;
    }
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (used[j]) continue;
      used[j] = 1;
      img[i] = a[j];
      self(self, i + 1);
      used[j] = 0;
    }
  };
  rec(rec, 0);
  std::sort(facets.begin(), facets.end());

  // Ridges shared by exactly two facets; propagate c1 [f1:r] + c2 [f2:r] = 0.
  std::map<Matching, std::vector<std::pair<std::size_t, int>>> ridges;
  for (std::size_t f = 0; f < facets.size(); ++f)
    for (std::size_t j = 0; j < facets[f].edges.size(); ++j) {
      Matching r = facets[f];
      r.edges.erase(r.edges.begin() + static_cast<long>(j));
      ridges[r].emplace_back(f, j % 2 ? -1 : 1);
    }
  std::vector<std::vector<std::tuple<std::size_t, int>>> adj(facets.size());
  for (const auto& [r, inc] : ridges) {
    if (inc.size() != 2) continue;
    int rel = -inc[0].second * inc[1].second;  // c2 = rel * c1
    adj[inc[0].first].emplace_back(inc[1].first, rel);
    adj[inc[1].first].emplace_back(inc[0].first, rel);
  }
  std::vector<int> sign(facets.size(), 0);
  sign[0] = 1;
  std::queue<std::size_t> q;
  q.push(0);
  while (!q.empty()) {
    std::size_t f = q.front();
    q.pop();
    for (auto [g, rel] : adj[f])
      if (!sign[g]) {
        sign[g] = rel * sign[f];
        q.push(g);
      }
  }
  Chain z(static_cast<int>(bs.size()) - 1);
  for (std::size_t f = 0; f < facets.size(); ++f) {
    if (!sign[f]) throw std::logic_error("facet graph disconnected");
    z.add_term(facets[f], sign[f]);
  }
  if (!boundary(z).is_zero()) throw std::logic_error("sign propagation did not close up");
  return z;
}

Chain theta(const Chain& z, const Chain& g, int shift) {
  if (z.vertex_mask() >> (shift + 1)) throw std::invalid_argument("z must be supported on [shift]");
  return wedge(z, matchcx::shift(g, shift));
}

std::vector<Chain> part_generators(const CyclePart& part, const std::vector<int>& block) {
  if (static_cast<int>(block.size()) != part.size) throw std::invalid_argument("block size does not match part");
  std::vector<int> s = block;
  std::sort(s.begin(), s.end());
  if (part.degree == 0) return {Chain::unit()};
  if (part.size == 3 && part.degree == 1) {
    auto e = [](int x, int y) { return Chain::oriented({{x, y}}); };
    int a = s[0], b = s[1], c = s[2];
    return {e(a, b) - e(b, c), e(a, b) - e(a, c), e(a, c) - e(b, c)};
  }
  int n = s.empty() ? 0 : s.back();
  auto cycle_basis = [&](std::vector<Chain>& out) {
    MatchingComplex k = matching_complex(complete_graph_on(std::max(n, 1), s));
    int dim = part.degree - 1;
    if (dim > k.dimension()) return;
    for (const auto& v : integer_kernel_basis(boundary_matrix(k, dim))) out.push_back(from_vector(k, dim, v));
  };
  if (part.size == 5 && part.degree == 2) {
    std::vector<Chain> out;
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j) {
        std::vector<int> bb{s[i], s[j]}, aa;
        for (int k = 0; k < 5; ++k)
          if (k != i && k != j) aa.push_back(s[k]);
        out.push_back(bipartite_fundamental_cycle(aa, bb));
      }
    // The hexagons only span an index 2 sublattice of the cycle group.
    cycle_basis(out);
    return out;
  }
  std::vector<Chain> out;
  cycle_basis(out);
  return out;
}

Chain type_cycle(const CycleType& type, const std::vector<std::vector<int>>& blocks,
                 const std::vector<std::size_t>& choices) {
  if (blocks.size() != type.size() || choices.size() != type.size())
    throw std::invalid_argument("one block and one choice per part expected");
  Chain z = Chain::unit();
  for (std::size_t i = 0; i < type.size(); ++i) {
    auto gens = part_generators(type[i], blocks[i]);
    if (choices[i] >= gens.size()) throw std::out_of_range("generator choice out of range");
    z = wedge(z, gens[choices[i]]);
  }
  return z;
}

namespace {

// k-subsets of items in colex order.
std::vector<std::vector<int>> colex_subsets(const std::vector<int>& items, int k) {
  std::vector<std::vector<int>> out;
  const int n = static_cast<int>(items.size());
  if (k > n || k < 0) return out;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    std::vector<int> s;
    for (int i : idx) s.push_back(items[i]);
    out.push_back(std::move(s));
    int j = 0;
    while (j < k && (j + 1 == k ? idx[j] + 1 >= n : idx[j] + 1 >= idx[j + 1])) ++j;
    if (j == k) break;
    ++idx[j];
    for (int i = 0; i < j; ++i) idx[i] = i;
  }
  return out;
}

}  // namespace

std::vector<Chain> enumerate_type_cycles(const CycleType& type, int n, std::size_t cap) {
  std::vector<Chain> out;
  int total = 0;
  for (const auto& p : type) total += p.size;
  if (total > n) throw std::invalid_argument("cycle type needs more vertices than available");
  if (cap == 0) return out;
  std::vector<std::vector<int>> blocks(type.size());
  std::vector<std::vector<Chain>> gens(type.size());
  auto emit = [&](auto&& self, std::size_t i, Chain acc) -> bool {
    if (i == type.size()) {
      out.push_back(std::move(acc));
      return out.size() < cap;
    }
    for (const auto& g : gens[i])
      if (!self(self, i + 1, wedge(acc, g))) return false;
    return true;
  };
  auto rec = [&](auto&& self, std::size_t i, std::vector<int> rest) -> bool {
    if (i == type.size()) return emit(emit, 0, Chain::unit());
    for (auto& s : colex_subsets(rest, type[i].size)) {
      blocks[i] = s;
      gens[i] = part_generators(type[i], s);
      std::vector<int> left;
      std::set_difference(rest.begin(), rest.end(), s.begin(), s.end(), std::back_inserter(left));
      if (!self(self, i + 1, std::move(left))) return false;
    }
    return true;
  };
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 1);
  rec(rec, 0, all);
  return out;
}

}  // namespace matchcx
