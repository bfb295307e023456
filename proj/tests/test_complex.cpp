#include "matchcx/cache.hpp"
#include "matchcx/complex.hpp"

#include <doctest.h>

#include <random>
#include <set>
#include <sstream>

using namespace matchcx;

namespace {

// I(n) = I(n-1) + (n-1) I(n-2): involutions of [n], equivalently matchings of K_n.
std::size_t involutions(int n) {
  std::size_t a = 1, b = 1;  // I(0), I(1)
  for (int k = 2; k <= n; ++k) {
    std::size_t c = b + static_cast<std::size_t>(k - 1) * a;
    a = b;
    b = c;
  }
  return n == 0 ? 1 : b;
}

// Matchings of g by subset enumeration, counted by size.
std::vector<std::size_t> brute_force_counts(const Graph& g) {
  const auto& es = g.edges();
  std::vector<std::size_t> counts(es.size() + 1, 0);
  for (std::uint64_t s = 0; s < (1ULL << es.size()); ++s) {
    std::uint64_t used = 0;
    bool ok = true;
    int size = 0;
    for (std::size_t j = 0; j < es.size() && ok; ++j)
      if (s >> j & 1) {
        std::uint64_t m = (1ULL << es[j].u) | (1ULL << es[j].v);
        ok = !(used & m);
        used |= m;
        ++size;
      }
    if (ok) ++counts[static_cast<std::size_t>(size)];
  }
  while (counts.size() > 1 && counts.back() == 0) counts.pop_back();
  return counts;
}

std::size_t crossings(const Matching& m, int split) {
  std::size_t c = 0;
  for (const auto& e : m.edges) c += e.u <= split && e.v > split;
  return c;
}

std::set<Matching> cell_set(const MatchingComplex& k) {
  std::set<Matching> s;
  for (int d = -1; d <= k.dimension(); ++d)
    for (const auto& m : k.simplices(d)) s.insert(m);
  return s;
}

}  // namespace

TEST_CASE("matching complexes of small graphs") {
  MatchingComplex k2 = matching_complex(complete_graph(2));
  CHECK(f_vector(k2) == std::vector<std::size_t>{1, 1});
  CHECK(k2.dimension() == 0);

  CHECK(f_vector(matching_complex(complete_graph(4))) == std::vector<std::size_t>{1, 6, 3});
  CHECK(f_vector(MatchingComplex::void_complex(complete_graph(3))) == std::vector<std::size_t>{0});

  MatchingComplex edgeless = matching_complex(Graph(3, {}));
  CHECK(f_vector(edgeless) == std::vector<std::size_t>{1});
  CHECK_FALSE(edgeless.is_void());
}

TEST_CASE("simplex counts match subset enumeration") {
  std::mt19937 rng(3);
  for (int n = 1; n <= 6; ++n) CHECK(f_vector(matching_complex(complete_graph(n))) == brute_force_counts(complete_graph(n)));
  for (int t = 0; t < 15; ++t) {
    std::bernoulli_distribution coin(0.5);
    std::vector<Edge> es;
    const int n = 3 + t % 5;
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v)
        if (coin(rng)) es.push_back({u, v});
    Graph g(n, es);
    CHECK(f_vector(matching_complex(g)) == brute_force_counts(g));
  }
}

TEST_CASE("total simplex count of M_n is the involution number") {
  CHECK(involutions(7) == 232);
  for (int n = 1; n <= 10; ++n) CHECK(matching_complex(complete_graph(n)).total_cells() == involutions(n));
}

TEST_CASE("downward closure and lexicographic indexing") {
  for (int n : {5, 7}) {
    MatchingComplex k = matching_complex(complete_graph(n));
    for (int d = 0; d <= k.dimension(); ++d) {
      auto cells = k.simplices(d);
      for (std::size_t i = 0; i < cells.size(); ++i) {
        CHECK(k.index_of(cells[i]) == i);
        if (i) CHECK(cells[i - 1] < cells[i]);
        for (std::size_t j = 0; j < cells[i].edges.size(); ++j) {
          Matching f = cells[i];
          f.edges.erase(f.edges.begin() + static_cast<long>(j));
          CHECK(k.contains(f));
        }
      }
    }
  }
  CHECK_THROWS_AS(MatchingComplex::from_simplices(complete_graph(4), {make_matching({{1, 2}, {3, 4}})}),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_matching({{1, 2}, {2, 3}}), std::invalid_argument);
}

TEST_CASE("deleting a 0-cell") {
  MatchingComplex m3 = delete_zero_cell(matching_complex(complete_graph(3)), make_edge(1, 2));
  CHECK(f_vector(m3) == std::vector<std::size_t>{1, 2});
  CHECK(m3.contains(make_matching({{1, 3}})));
  CHECK(m3.contains(make_matching({{2, 3}})));

  MatchingComplex m7 = matching_complex(complete_graph(7));
  MatchingComplex d7 = delete_zero_cell(m7, make_edge(1, 2));
  CHECK(m7.total_cells() - d7.total_cells() == involutions(5));
  for (int d = -1; d <= d7.dimension(); ++d)
    for (const auto& s : d7.simplices(d)) CHECK_FALSE(s.contains(make_edge(1, 2)));
}

TEST_CASE("filtration levels") {
  CHECK(filtration_level(5, 1, 1) == matching_complex(complete_graph(5)));
  CHECK(filtration_level(6, 3, 3) == matching_complex(complete_graph(6)));
  CHECK(filtration_level(4, 2, -1).is_void());

  MatchingComplex avoid = filtration_level(6, 1, 0);
  CHECK(f_vector(avoid) == f_vector(matching_complex(complete_graph(5))));
  for (int d = 0; d <= avoid.dimension(); ++d)
    for (const auto& s : avoid.simplices(d)) CHECK_FALSE(s.covers(1));

  for (int n = 4; n <= 8; ++n)
    for (int m = 1; m <= 3 && m < n; ++m) {
      const int top = std::min(m, n - m);
      for (int i = 0; i <= top; ++i) {
        auto lower = cell_set(filtration_level(n, m, i - 1));
        auto upper = cell_set(filtration_level(n, m, i));
        CHECK(std::includes(upper.begin(), upper.end(), lower.begin(), lower.end()));
        for (const auto& s : upper)
          if (!lower.count(s)) CHECK(crossings(s, m) == static_cast<std::size_t>(i));
      }
    }
}

TEST_CASE("joins") {
  MatchingComplex unit = matching_complex(Graph(0, {}));
  MatchingComplex k4 = matching_complex(complete_graph(4));
  CHECK(f_vector(join(unit, k4, 0)) == f_vector(k4));

  MatchingComplex k3 = matching_complex(complete_graph(3));
  MatchingComplex j = join(k3, k3, 3);
  CHECK(j.dimension() == 1);
  CHECK(j.count(1) == 9);
  CHECK(f_vector(j) == std::vector<std::size_t>{1, 6, 9});
  CHECK(join(k3, MatchingComplex::void_complex(complete_graph(3)), 3).is_void());
}

TEST_CASE("complex serialisation round trip") {
  std::vector<MatchingComplex> ks{matching_complex(complete_graph(6)),
                                  delete_zero_cell(matching_complex(complete_graph(5)), make_edge(1, 2)),
                                  filtration_level(7, 3, 1), MatchingComplex::void_complex(complete_graph(4)),
                                  matching_complex(Graph(2, {}))};
  for (const auto& k : ks) {
    std::stringstream s;
    write_complex(s, k);
    MatchingComplex back = read_complex(s);
    CHECK(back == k);
    CHECK(back.content_hash() == k.content_hash());
  }
  std::istringstream bad("matchcx-complex 2\n");
  CHECK_THROWS_AS(read_complex(bad), std::invalid_argument);
}

TEST_CASE("content hashes separate different complexes") {
  std::set<std::uint64_t> seen;
  for (int n = 1; n <= 8; ++n) {
    seen.insert(matching_complex(complete_graph(n)).content_hash());
    if (n >= 2) seen.insert(delete_zero_cell(matching_complex(complete_graph(n)), make_edge(1, 2)).content_hash());
  }
  CHECK(seen.size() == 15);
}
