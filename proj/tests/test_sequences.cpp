#include "matchcx/sequences.hpp"
#include "matchcx/snf.hpp"

#include <doctest.h>

#include <random>

using namespace matchcx;

namespace {

MatchingComplex m_n(int n) { return matching_complex(complete_graph(n)); }

const SequenceKind kKinds[] = {SequenceKind::Seq012, SequenceKind::Seq034, SequenceKind::Seq0356,
                               SequenceKind::Seq0e2, SequenceKind::Seq0235};

int connectivity_degree(int n) { return (n - 4 + 2) / 3; }  // ceil((n - 4) / 3) for n >= 4

}  // namespace

TEST_CASE("kind names") {
  for (auto k : kKinds) CHECK(parse_sequence_kind(to_string(k)) == k);
  CHECK(parse_sequence_kind("pair") == SequenceKind::Pair);
  CHECK_THROWS_AS(parse_sequence_kind("0-1"), std::invalid_argument);
  CHECK(default_window(7) == std::pair{-1, 3});
}

TEST_CASE("every sequence is exact for n = 6, 7, 8") {
  for (auto kind : kKinds)
    for (int n = 6; n <= 8; ++n) {
      INFO(to_string(kind) << " n=" << n);
      auto s = make_sequence(kind, n);
      auto r = verify_exactness(s, Ring::integers());
      CHECK(r.passed());
      for (const auto& c : r.chain_maps) CHECK(c.ok);
      for (const auto& c : r.homology_checks) CHECK(c.ok);
      for (const auto& node : r.nodes) {
        CHECK(node.composite_zero);
        for (const auto& [ring, f] : node.fields) CHECK(f.exact);
      }
    }
}

TEST_CASE("exactness over fields and integrally") {
  auto s = seq_0356(7);
  for (auto ring : {Ring::rationals(), Ring::mod(3)}) CHECK(verify_exactness(s, ring).passed());
  ExactnessOptions opt;
  opt.exact_integral = true;
  auto r = verify_exactness(seq_012(6), Ring::integers(), opt);
  CHECK(r.passed());
  for (const auto& node : r.nodes) {
    REQUIRE(node.exact_integral.has_value());
    CHECK(*node.exact_integral);
  }
}

TEST_CASE("corrupting any stored map is detected") {
  const char* maps[] = {"f", "g", "alpha", "delta"};
  for (const char* m : maps) {
    auto s = seq_012(6);
    REQUIRE(s.f.count(1));
    corrupt_map(s, m, 1);
    INFO(m);
    CHECK_FALSE(verify_exactness(s, Ring::integers()).passed());
  }
  auto s = seq_0356(7);
  REQUIRE(s.explicit_h);
  int deg = s.h.begin()->first;
  for (const auto& [d, mat] : s.h)
    if (!mat.is_zero()) deg = d;
  corrupt_map(s, "h", deg);
  CHECK_FALSE(verify_exactness(s, Ring::integers()).passed());
  CHECK_THROWS_AS(corrupt_map(s, "nope", 1), std::invalid_argument);
}

TEST_CASE("long exact sequences of pairs") {
  auto trivial = pair_les(ComplexPair(m_n(6), m_n(6)), -1, 2);
  auto r = verify_exactness(trivial, Ring::integers());
  CHECK(r.passed());
  for (const auto& node : r.nodes)
    if (node.node == 2) CHECK(node.group.is_zero());

  auto x = m_n(5);
  auto pair = pair_les(ComplexPair(x, delete_zero_cell(x, make_edge(1, 2))), -1, 2);
  auto p = verify_exactness(pair, Ring::integers());
  CHECK(p.passed());
  for (const auto& node : p.nodes) {
    if (node.node == 0 && node.degree == 1) CHECK(node.group == make_group(4));
    if (node.node == 1 && node.degree == 1) CHECK(node.group == make_group(6));
    if (node.node == 2 && node.degree == 1) CHECK(node.group == make_group(2));
  }

  std::mt19937 rng(47);
  std::bernoulli_distribution coin(0.6);
  for (int t = 0; t < 6; ++t) {
    const int n = 5 + t % 3;
    std::vector<Edge> es;
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v)
        if (coin(rng)) es.push_back({u, v});
    if (es.empty()) continue;
    MatchingComplex k = matching_complex(Graph(n, es));
    MatchingComplex a = delete_zero_cell(k, es[static_cast<std::size_t>(t) % es.size()]);
    CHECK(verify_exactness(pair_les(ComplexPair(k, a), -1, k.dimension()), Ring::integers()).passed());
  }
}

TEST_CASE("the tail map onto the bottom degree is surjective") {
  for (int n = 6; n <= 10; ++n) {
    INFO("n=" << n);
    const int nu = connectivity_degree(n);
    auto s = seq_0356(n, std::pair{nu - 1, nu + 1});
    REQUIRE(s.f.count(nu));
    std::vector<Chain> images;
    for (const auto& v : integer_kernel_basis(s.c0.boundary(nu))) images.push_back(s.x.chain(nu, multiply(s.f.at(nu), v)));
    CHECK(classes_generate(s.ambient, nu, images, Ring::integers()));
  }
}

TEST_CASE("mod 3 inequalities") {
  auto rows = inequality_report(9);
  CHECK_FALSE(rows.empty());
  for (const auto& r : rows) {
    INFO("n=" << r.n << " d=" << r.d);
    CHECK(r.first_holds());
    CHECK(r.second_holds());
  }
  bool seen = false;
  for (const auto& r : rows)
    if (r.n == 9 && r.d == 2) {
      CHECK(r.beta == 50);
      seen = true;
    }
  CHECK(seen);
}
