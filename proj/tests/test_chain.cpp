#include "matchcx/chain.hpp"
#include "matchcx/cycles.hpp"
#include "matchcx/homology.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace matchcx;

namespace {

Chain e(int u, int v) { return Chain::oriented({make_edge(u, v)}); }
Chain e2(int a, int b, int c, int d) { return Chain::oriented({make_edge(a, b), make_edge(c, d)}); }

// Random d-chain of M(K_S) for a vertex subset S.
Chain random_chain(std::mt19937& rng, const std::vector<int>& support, int d) {
  int n = *std::max_element(support.begin(), support.end());
  MatchingComplex k = matching_complex(complete_graph_on(n, support));
  Chain c(d);
  if (d > k.dimension()) return c;
  auto cells = k.simplices(d);
  std::uniform_int_distribution<std::size_t> pick(0, cells.size() - 1);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int t = 0; t < 4; ++t) c.add_term(cells[pick(rng)], coeff(rng));
  return c;
}

int sign_pow(int e) { return e % 2 == 0 ? 1 : -1; }

std::vector<int> random_permutation(std::mt19937& rng, int n) {
  std::vector<int> p(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  std::shuffle(img.begin(), img.end(), rng);
  for (int v = 1; v <= n; ++v) p[static_cast<std::size_t>(v)] = img[static_cast<std::size_t>(v - 1)];
  return p;
}

}  // namespace

TEST_CASE("boundary matrices") {
  SparseIntMatrix b = boundary_matrix(matching_complex(complete_graph(2)), 0);
  CHECK(b.rows() == 1);
  CHECK(b.cols() == 1);
  CHECK(b.at(0, 0) == 1);

  MatchingComplex k4 = matching_complex(complete_graph(4));
  SparseIntMatrix b1 = boundary_matrix(k4, 1);
  CHECK(b1.rows() == 6);
  CHECK(b1.cols() == 3);
  for (std::size_t j = 0; j < 3; ++j) {
    CHECK(b1.column(j).size() == 2);
    for (const auto& x : b1.column(j)) CHECK(abs(x.value) == 1);
  }
  SparseIntMatrix bm = boundary_matrix(k4, -1);
  CHECK(bm.rows() == 0);
  CHECK(bm.cols() == 1);
  CHECK_THROWS_AS(boundary_matrix(k4, -2), std::invalid_argument);
}

TEST_CASE("boundary of a boundary vanishes") {
  std::vector<MatchingComplex> ks;
  for (int n = 2; n <= 9; ++n) ks.push_back(matching_complex(complete_graph(n)));
  ks.push_back(delete_zero_cell(matching_complex(complete_graph(7)), make_edge(1, 2)));
  ks.push_back(matching_complex(complete_bipartite(4, 3)));
  ks.push_back(matching_complex(near_matching_deleted_graph(3)));
  ks.push_back(filtration_level(8, 3, 2));
  for (const auto& k : ks)
    for (int d = 1; d <= k.dimension(); ++d) CHECK((boundary_matrix(k, d - 1) * boundary_matrix(k, d)).is_zero());
}

TEST_CASE("boundary of chains") {
  CHECK(boundary(e2(1, 2, 3, 4)) == e(3, 4) - e(1, 2));
  CHECK(boundary(e(1, 2)) == Chain::unit());
  MatchingComplex m6 = matching_complex(complete_graph(6));
  CHECK(apply_boundary(m6, gamma(2)).is_zero());
  CHECK(is_cycle(matching_complex(complete_graph(7)), gamma(2)));
  CHECK_FALSE(is_cycle(m6, e2(1, 2, 3, 4)));
  CHECK(is_cycle(m6, Chain(1)));
  CHECK_THROWS_AS(apply_boundary(matching_complex(complete_graph(3)), e2(1, 2, 3, 4)), std::invalid_argument);

  std::mt19937 rng(5);
  for (int t = 0; t < 50; ++t) {
    Chain c = random_chain(rng, {1, 2, 3, 4, 5, 6, 7, 8}, t % 4);
    CHECK(boundary(boundary(c)).is_zero());
  }
}

TEST_CASE("wedge products") {
  Chain g = wedge(e(1, 2) - e(2, 3), e(4, 5) - e(5, 6));
  CHECK(g == gamma(2));
  CHECK(g.size() == 4);
  CHECK(boundary(g).is_zero());
  CHECK(wedge(Chain::unit(), e(1, 2)) == e(1, 2));
  CHECK(wedge(e(1, 2), Chain::unit()) == e(1, 2));
  CHECK(wedge(e(3, 4), e(1, 2)) == -e2(1, 2, 3, 4));
  CHECK_THROWS_AS(wedge(e(1, 2), e(2, 3)), std::invalid_argument);

  std::mt19937 rng(9);
  const std::vector<int> A{1, 2, 3, 4}, B{5, 6, 7}, C{8, 9, 10, 11};
  for (int t = 0; t < 40; ++t) {
    const int da = t % 2, db = (t / 2) % 2 - (t % 5 == 0 ? 1 : 0), dc = (t / 3) % 2;
    Chain a = random_chain(rng, A, da), b = random_chain(rng, B, db), c = random_chain(rng, C, dc);
    CHECK(wedge(a, b) == sign_pow((da + 1) * (db + 1)) * wedge(b, a));
    CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
    // Leibniz rule with the degree shift of the augmented complex.
    CHECK(boundary(wedge(a, b)) == wedge(boundary(a), b) + sign_pow(da + 1) * wedge(a, boundary(b)));
  }
}

TEST_CASE("wedge of cycles is a cycle") {
  Chain z = bipartite_fundamental_cycle({1, 2, 3}, {4, 5});
  Chain w = wedge(z, shift(e(1, 2) - e(1, 3), 5));
  CHECK(is_cycle(matching_complex(complete_graph(8)), w));
}

TEST_CASE("relabelling") {
  std::vector<int> id(8);
  std::iota(id.begin(), id.end(), 0);
  CHECK(relabel(gamma(2), id) == gamma(2));

  Chain s = shift(gamma(2), 1);
  CHECK(s.vertex_mask() == 0b11111100);
  CHECK(is_cycle(matching_complex(complete_graph(7)), s));

  std::mt19937 rng(13);
  MatchingComplex m7 = matching_complex(complete_graph(7));
  for (int t = 0; t < 30; ++t) {
    auto p = random_permutation(rng, 7);
    std::vector<int> inv(p.size(), 0);
    for (int v = 1; v <= 7; ++v) inv[static_cast<std::size_t>(p[static_cast<std::size_t>(v)])] = v;
    Chain c = random_chain(rng, {1, 2, 3, 4, 5, 6, 7}, t % 3);
    CHECK(relabel(relabel(c, p), inv) == c);
    CHECK(is_cycle(m7, relabel(gamma(2), p)));
    CHECK(boundary(relabel(c, p)) == relabel(boundary(c), p));
  }
  std::vector<int> collapse{0, 1, 1, 3, 4, 5, 6};
  CHECK_THROWS_AS(relabel(gamma(2), collapse), std::invalid_argument);
}

TEST_CASE("transposition (1 3) negates the class of gamma_6 in M_7") {
  std::vector<int> p{0, 3, 2, 1, 4, 5, 6, 7};
  MatchingComplex m7 = matching_complex(complete_graph(7));
  Chain sum = gamma(2) + relabel(gamma(2), p);
  auto ord = class_order(m7, 1, sum);
  REQUIRE(ord.has_value());
  CHECK(*ord == 1);
}

TEST_CASE("coefficient vectors") {
  MatchingComplex m6 = matching_complex(complete_graph(6));
  SparseVector v = to_vector(m6, gamma(2));
  CHECK(v.size() == 4);
  CHECK(from_vector(m6, 1, v) == gamma(2));
}

TEST_CASE("chain text round trip") {
  std::mt19937 rng(17);
  for (int t = 0; t < 20; ++t) {
    Chain c = random_chain(rng, {1, 2, 3, 4, 5, 6, 7}, t % 3);
    if (c.is_zero()) continue;
    CHECK(parse_chain(format_chain(c)) == c);
  }
  CHECK(parse_chain("2  {}") == 2 * Chain::unit());
  CHECK(parse_chain("1  3 4 | 1 2\n") == -e2(1, 2, 3, 4));
  CHECK_THROWS_AS(parse_chain("x  1 2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_chain("1  1 2 3"), std::invalid_argument);
}

TEST_CASE("sort sign") {
  std::vector<Edge> es{{3, 4}, {1, 2}, {5, 6}};
  CHECK(sort_sign(es) == -1);
  CHECK(es == std::vector<Edge>{{1, 2}, {3, 4}, {5, 6}});
  std::vector<Edge> rep{{1, 2}, {1, 2}};
  CHECK(sort_sign(rep) == 0);
}

TEST_CASE("reduction mod p") {
  Chain c = 7 * e(1, 2) - 3 * e(3, 4);
  Chain r = c.reduced_mod(3);
  CHECK(r.coefficient(make_matching({{1, 2}})) == 1);
  CHECK(r.coefficient(make_matching({{3, 4}})) == 0);
}
