#include "matchcx/chain.hpp"
#include "matchcx/snf.hpp"
#include "matchcx/suites.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace matchcx;

namespace {

DenseIntMatrix random_dense(std::mt19937& rng, std::size_t r, std::size_t c, int lo, int hi, double density) {
  std::uniform_int_distribution<int> val(lo, hi);
  std::bernoulli_distribution keep(density);
  DenseIntMatrix m(r, std::vector<Integer>(c, 0));
  for (auto& row : m)
    for (auto& x : row)
      if (keep(rng)) x = val(rng);
  return m;
}

// Laplace expansion along the first row.
Integer det(const DenseIntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Integer total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    DenseIntMatrix minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Integer> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(row);
    }
    Integer t = m[0][j] * det(minor);
    total += (j % 2 == 0) ? t : Integer(-t);
  }
  return total;
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> pick(n, false);
  std::fill(pick.end() - static_cast<long>(k), pick.end(), true);
  do {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (pick[i]) s.push_back(i);
    out.push_back(s);
  } while (std::next_permutation(pick.begin(), pick.end()));
  return out;
}

// Invariant factors as ratios of determinantal divisors (gcds of k x k minors).
std::vector<Integer> determinantal_factors(const DenseIntMatrix& m, std::size_t cols) {
  const std::size_t rows = m.size();
  std::vector<Integer> out;
  Integer prev = 1;
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    Integer g = 0;
    for (const auto& rs : subsets(rows, k))
      for (const auto& cs : subsets(cols, k)) {
        DenseIntMatrix sub;
        for (auto r : rs) {
          std::vector<Integer> row;
          for (auto c : cs) row.push_back(m[r][c]);
          sub.push_back(row);
        }
        Integer d = abs(det(sub));
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      }
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

DenseIntMatrix multiply(const DenseIntMatrix& a, const DenseIntMatrix& b) {
  DenseIntMatrix c(a.size(), std::vector<Integer>(b.empty() ? 0 : b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < c[i].size(); ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

std::size_t rank_mod_p_dense(DenseIntMatrix a, std::size_t cols, long p) {
  for (auto& row : a)
    for (auto& x : row) x = ((x % p) + p) % p;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t piv = r;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[r]);
    Integer inv;
    Integer pp = p;
    mpz_invert(inv.get_mpz_t(), a[r][c].get_mpz_t(), pp.get_mpz_t());
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      Integer q = a[i][c] * inv;
      for (std::size_t j = 0; j < cols; ++j) a[i][j] = (((a[i][j] - q * a[r][j]) % p) + p) % p;
    }
    ++r;
  }
  return r;
}

}  // namespace

TEST_CASE("small Smith normal forms") {
  auto id = smith_normal_form(SparseIntMatrix::identity(3));
  CHECK(id.invariant_factors == std::vector<Integer>{1, 1, 1});
  CHECK(id.torsion().empty());

  auto m = smith_normal_form(SparseIntMatrix::from_dense({{2, 4}, {6, 8}}, 2));
  CHECK(m.invariant_factors == std::vector<Integer>{2, 4});
  CHECK(m.torsion() == std::vector<Integer>{2, 4});

  auto zero = smith_normal_form(SparseIntMatrix(3, 2));
  CHECK(zero.rank == 0);
  CHECK(zero.invariant_factors.empty());

  auto empty = smith_normal_form(SparseIntMatrix(0, 4));
  CHECK(empty.rank == 0);
}

TEST_CASE("psi_* image matrix has invariant factors (1, 1, 1, 3)") {
  const DenseIntMatrix psi = {{0, 1, -1, 0}, {1, 0, 0, -1}, {0, -1, -1, 1}, {1, -1, 0, 1}};
  CHECK(det(psi) == 3);
  CHECK(determinantal_factors(psi, 4) == std::vector<Integer>{1, 1, 1, 3});
  CHECK(smith_normal_form(SparseIntMatrix::from_dense(psi, 4)).invariant_factors ==
        std::vector<Integer>{1, 1, 1, 3});
}

TEST_CASE("invariant factors agree with determinantal divisors") {
  std::mt19937 rng(21);
  for (int t = 0; t < 200; ++t) {
    const std::size_t r = 1 + t % 4, c = 1 + (t / 4) % 4;
    auto m = random_dense(rng, r, c, -6, 6, 0.7);
    auto want = determinantal_factors(m, c);
    CHECK(smith_normal_form(SparseIntMatrix::from_dense(m, c)).invariant_factors == want);
    CHECK(dense_smith_normal_form(m, c, false).invariant_factors == want);
  }
}

TEST_CASE("transforms diagonalise") {
  std::mt19937 rng(23);
  for (int t = 0; t < 40; ++t) {
    const std::size_t r = 2 + t % 5, c = 2 + (t / 5) % 5;
    auto m = random_dense(rng, r, c, -9, 9, 0.5);
    auto s = dense_smith_normal_form(m, c, true);
    REQUIRE(s.U.has_value());
    REQUIRE(s.V.has_value());
    auto d = multiply(multiply(*s.U, m), *s.V);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) {
        Integer want = (i == j && i < s.rank) ? s.invariant_factors[i] : Integer(0);
        CHECK(d[i][j] == want);
      }
    CHECK(abs(det(*s.U)) == 1);
    CHECK(abs(det(*s.V)) == 1);
  }
}

TEST_CASE("invariant factors ignore row and column order") {
  std::mt19937 rng(29);
  for (int t = 0; t < 40; ++t) {
    const std::size_t r = 3 + t % 6, c = 3 + (t / 6) % 6;
    auto m = random_dense(rng, r, c, -4, 4, 0.4);
    auto base = smith_normal_form(SparseIntMatrix::from_dense(m, c)).invariant_factors;
    std::vector<std::size_t> pr(r), pc(c);
    std::iota(pr.begin(), pr.end(), 0);
    std::iota(pc.begin(), pc.end(), 0);
    std::shuffle(pr.begin(), pr.end(), rng);
    std::shuffle(pc.begin(), pc.end(), rng);
    DenseIntMatrix p(r, std::vector<Integer>(c));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) p[i][j] = m[pr[i]][pc[j]];
    CHECK(smith_normal_form(SparseIntMatrix::from_dense(p, c)).invariant_factors == base);
  }
}

TEST_CASE("large entries leave machine integers") {
  Integer big("123456789012345678901234567890");
  DenseIntMatrix m{{big, big + 1}, {big - 1, big}};
  // det = big^2 - (big^2 - 1) = 1
  CHECK(smith_normal_form(SparseIntMatrix::from_dense(m, 2)).invariant_factors == std::vector<Integer>{1, 1});
  DenseIntMatrix s{{big * 2, 0}, {0, big * 3}};
  CHECK(smith_normal_form(SparseIntMatrix::from_dense(s, 2)).invariant_factors ==
        std::vector<Integer>{big, big * 6});
}

TEST_CASE("boundary matrices of M_7 carry 3-torsion") {
  auto k = matching_complex(complete_graph(7));
  auto s = smith_normal_form(boundary_matrix(k, 2));
  CHECK(s.torsion() == std::vector<Integer>{3});
}

TEST_CASE("ranks over fields") {
  std::mt19937 rng(31);
  for (int t = 0; t < 60; ++t) {
    const std::size_t r = 2 + t % 7, c = 2 + (t / 7) % 7;
    auto m = random_dense(rng, r, c, -5, 5, 0.5);
    auto sm = SparseIntMatrix::from_dense(m, c);
    auto s = smith_normal_form(sm);
    CHECK(rank_rational(sm) == s.rank);
    for (long p : {2L, 3L, 5L, 7L}) {
      CHECK(rank_mod_p(sm, static_cast<std::uint32_t>(p)) == rank_mod_p_dense(m, c, p));
      std::size_t units = 0;
      for (const auto& d : s.invariant_factors) units += mpz_divisible_ui_p(d.get_mpz_t(), static_cast<unsigned long>(p)) == 0;
      CHECK(rank_mod_p(sm, static_cast<std::uint32_t>(p)) == units);
    }
  }
}

TEST_CASE("integer kernel bases") {
  std::mt19937 rng(37);
  for (int t = 0; t < 40; ++t) {
    const std::size_t r = 2 + t % 4, c = 3 + (t / 4) % 5;
    auto m = random_dense(rng, r, c, -4, 4, 0.6);
    auto sm = SparseIntMatrix::from_dense(m, c);
    auto ker = integer_kernel_basis(sm);
    CHECK(ker.size() == c - smith_normal_form(sm).rank);
    for (const auto& v : ker) CHECK(multiply(sm, v).empty());
    // A lattice basis of the kernel is saturated: its own invariant factors are all 1.
    std::vector<Triplet> ts;
    for (std::size_t j = 0; j < ker.size(); ++j)
      for (const auto& e : ker[j]) ts.push_back({e.row, j, e.value});
    auto kb = SparseIntMatrix::from_triplets(c, ker.size(), ts);
    for (const auto& d : smith_normal_form(kb).invariant_factors) CHECK(d == 1);
  }
}

TEST_CASE("cokernel orders") {
  // Image of diag(2, 3, 0) in Z^3.
  auto m = SparseIntMatrix::from_dense({{2, 0, 0}, {0, 3, 0}, {0, 0, 0}}, 3);
  std::vector<SparseVector> vs{{{0, 1}}, {{1, 1}}, {{0, 1}, {1, 1}}, {{2, 1}}, {{0, 4}}, {}};
  auto o = cokernel_orders(m, vs);
  REQUIRE(o.size() == 6);
  CHECK(o[0] == Integer(2));
  CHECK(o[1] == Integer(3));
  CHECK(o[2] == Integer(6));
  CHECK_FALSE(o[3].has_value());
  CHECK(o[4] == Integer(1));
  CHECK(o[5] == Integer(1));
}

TEST_CASE("absolute determinant") {
  std::mt19937 rng(41);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 1 + t % 5;
    auto m = random_dense(rng, n, n, -5, 5, 0.8);
    CHECK(abs_determinant(m) == abs(det(m)));
  }
}
