#include "matchcx/snf.hpp"

#include "matchcx/elimination.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <stdexcept>

namespace matchcx {

std::vector<Integer> SnfResult::torsion() const {
  std::vector<Integer> t;
  for (const auto& d : invariant_factors)
    if (d > 1) t.push_back(d);
  return t;
}

namespace {

DenseIntMatrix identity_dense(std::size_t n) {
  DenseIntMatrix I(n, std::vector<Integer>(n, 0));
  for (std::size_t i = 0; i < n; ++i) I[i][i] = 1;
  return I;
}

struct DenseSnf {
  DenseIntMatrix& a;
  std::size_t m, n;
  DenseIntMatrix* U;
  DenseIntMatrix* V;
  DenseIntMatrix* P;

  void row_op(std::size_t i, std::size_t j, const Integer& q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < n; ++c)
      if (a[j][c] != 0) a[i][c] -= q * a[j][c];
    for (auto* M : {U, P})
      if (M)
        for (std::size_t c = 0; c < (*M)[j].size(); ++c)
          if ((*M)[j][c] != 0) (*M)[i][c] -= q * (*M)[j][c];
  }
  void row_swap(std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap(a[i], a[j]);
    for (auto* M : {U, P})
      if (M) std::swap((*M)[i], (*M)[j]);
  }
  void row_negate(std::size_t i) {
    for (auto& x : a[i]) x = -x;
    for (auto* M : {U, P})
      if (M)
        for (auto& x : (*M)[i]) x = -x;
  }
  void col_op(std::size_t j, std::size_t k, const Integer& q) {
    if (q == 0) return;
    for (std::size_t r = 0; r < m; ++r)
      if (a[r][k] != 0) a[r][j] -= q * a[r][k];
    if (V)
      for (auto& row : *V)
        if (row[k] != 0) row[j] -= q * row[k];
  }
  void col_swap(std::size_t j, std::size_t k) {
    if (j == k) return;
    for (auto& row : a) std::swap(row[j], row[k]);
    if (V)
      for (auto& row : *V) std::swap(row[j], row[k]);
  }

  std::size_t run() {
    std::size_t t = 0;
    for (; t < std::min(m, n); ++t) {
      std::size_t bi = m, bj = n;
      for (std::size_t i = t; i < m; ++i) {
        for (std::size_t j = t; j < n; ++j)
          if (sgn(a[i][j]) != 0 && (bi == m || mpz_cmpabs(a[i][j].get_mpz_t(), a[bi][bj].get_mpz_t()) < 0)) {
            bi = i;
            bj = j;
            if (mpz_cmpabs_ui(a[i][j].get_mpz_t(), 1) == 0) break;
          }
        if (bi != m && mpz_cmpabs_ui(a[bi][bj].get_mpz_t(), 1) == 0) break;
      }
      if (bi == m) break;
      row_swap(t, bi);
      col_swap(t, bj);
      for (;;) {
        bool dirty = false;
        for (std::size_t i = t + 1; i < m; ++i)
          if (a[i][t] != 0) {
            Integer q = a[i][t] / a[t][t];
            row_op(i, t, q);
            if (a[i][t] != 0) dirty = true;
          }
        for (std::size_t j = t + 1; j < n; ++j)
          if (a[t][j] != 0) {
            Integer q = a[t][j] / a[t][t];
            col_op(j, t, q);
            if (a[t][j] != 0) dirty = true;
          }
        if (dirty) {
          std::size_t si = t, sj = t;
          for (std::size_t i = t + 1; i < m; ++i)
            if (a[i][t] != 0 && mpz_cmpabs(a[i][t].get_mpz_t(), a[si][sj].get_mpz_t()) < 0) si = i, sj = t;
          for (std::size_t j = t + 1; j < n; ++j)
            if (a[t][j] != 0 && mpz_cmpabs(a[t][j].get_mpz_t(), a[si][sj].get_mpz_t()) < 0) si = t, sj = j;
          row_swap(t, si);
          col_swap(t, sj);
          continue;
        }
        std::size_t fi = m;
        for (std::size_t i = t + 1; i < m && fi == m; ++i)
          for (std::size_t j = t + 1; j < n; ++j)
            if (a[i][j] != 0 && !mpz_divisible_p(a[i][j].get_mpz_t(), a[t][t].get_mpz_t())) {
              fi = i;
              break;
            }
        if (fi == m) break;
        row_op(t, fi, -1);
      }
      if (a[t][t] < 0) row_negate(t);
    }
    return t;
  }
};

struct Residual {
  std::size_t pivots = 0;
  // Passenger parts of pivot rows; each pivot row carries its own diagonal entry.
  std::vector<std::vector<MatrixEntry>> pivot_passengers;
  // Non-pivot rows restricted to pivotable columns, and their passenger parts.
  std::vector<std::vector<MatrixEntry>> rows;
  std::vector<std::vector<MatrixEntry>> passengers;
};

template <class P>
Residual eliminate(const P& policy, std::size_t ncols, const std::vector<std::vector<MatrixEntry>>& rows) {
  using E = detail::Eliminator<P>;
  std::vector<typename E::Row> in(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& e : rows[i]) {
      in[i].idx.push_back(static_cast<std::uint32_t>(e.row));
      in[i].val.push_back(policy.from(e.value));
    }
  E elim(policy, ncols, std::move(in));
  Residual res;
  res.pivots = elim.run();
  for (auto& pp : elim.pivot_passengers(ncols, [](const auto& v) { return P::to_int(v); })) {
    std::vector<MatrixEntry> row;
    for (auto& it : pp) row.push_back({it.row, std::move(it.value)});
    res.pivot_passengers.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (elim.pivoted(i)) continue;
    const auto& r = elim.rows()[i];
    std::vector<MatrixEntry> main, pass;
    for (std::size_t k = 0; k < r.idx.size(); ++k) {
      if (r.idx[k] < ncols)
        main.push_back({r.idx[k], P::to_int(r.val[k])});
      else
        pass.push_back({r.idx[k] - ncols, P::to_int(r.val[k])});
    }
    if (main.empty() && pass.empty()) continue;
    res.rows.push_back(std::move(main));
    res.passengers.push_back(std::move(pass));
  }
  return res;
}

std::vector<std::vector<MatrixEntry>> row_lists(const SparseIntMatrix& m, const std::vector<SparseVector>& extra) {
  std::vector<std::vector<MatrixEntry>> rows(m.rows());
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (const auto& e : m.column(c)) rows[e.row].push_back({c, e.value});
  for (std::size_t q = 0; q < extra.size(); ++q)
    for (const auto& e : extra[q]) {
      if (e.row >= m.rows()) throw std::out_of_range("vector longer than matrix column space");
      rows[e.row].push_back({m.cols() + q, e.value});
    }
  return rows;
}

// Dense block of the residual rows over the columns they touch.
DenseIntMatrix densify(const std::vector<std::vector<MatrixEntry>>& rows, std::size_t& ncols) {
  std::map<std::size_t, std::size_t> colmap;
  for (const auto& r : rows)
    for (const auto& e : r) colmap.emplace(e.row, 0);
  std::size_t k = 0;
  for (auto& [c, idx] : colmap) idx = k++;
  ncols = k;
  DenseIntMatrix d(rows.size(), std::vector<Integer>(k, 0));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& e : rows[i]) d[i][colmap[e.row]] = e.value;
  return d;
}

}  // namespace

SnfResult dense_smith_normal_form(DenseIntMatrix a, std::size_t cols, bool want_transforms, DenseIntMatrix* passengers) {
  const std::size_t m = a.size();
  for (const auto& row : a)
    if (row.size() != cols) throw std::invalid_argument("ragged dense matrix");
  SnfResult res;
  DenseIntMatrix U, V;
  if (want_transforms) {
    U = identity_dense(m);
    V = identity_dense(cols);
  }
  DenseSnf s{a, m, cols, want_transforms ? &U : nullptr, want_transforms ? &V : nullptr, passengers};
  res.rank = s.run();
  for (std::size_t t = 0; t < res.rank; ++t) res.invariant_factors.push_back(a[t][t]);
  if (want_transforms) {
    res.U = std::move(U);
    res.V = std::move(V);
  }
  return res;
}

namespace {

Integer content(const std::vector<std::vector<MatrixEntry>>& rows) {
  Integer g = 0;
  for (const auto& r : rows)
    for (const auto& e : r) {
      g = gcd(g, e.value);
      if (g == 1) return g;
    }
  return g;
}

// Staged reduction: unit elimination, then division of the residual by its
// content, repeated until the residual has content 1 or vanishes.
struct Staged {
  std::vector<std::pair<Integer, std::size_t>> stages;  // (diagonal value, count)
  std::vector<std::pair<Integer, std::vector<MatrixEntry>>> scaled_pivot_passengers;
  std::vector<std::vector<MatrixEntry>> rows, passengers;  // final residual
  Integer scale = 1;
};

Staged staged_reduce(const SparseIntMatrix& m, const std::vector<SparseVector>& extra) {
  Staged st;
  auto rows = row_lists(m, extra);
  std::size_t ncols = m.cols();
  for (;;) {
    Residual r;
    try {
      r = eliminate(detail::CheckedIntPolicy{}, ncols, rows);
    } catch (const detail::OverflowError&) {
      r = eliminate(detail::BigIntPolicy{}, ncols, rows);
    }
    if (r.pivots) st.stages.emplace_back(st.scale, r.pivots);
    if (st.scale > 1)
      for (auto& pp : r.pivot_passengers)
        if (!pp.empty()) st.scaled_pivot_passengers.emplace_back(st.scale, std::move(pp));
    std::vector<std::vector<MatrixEntry>> main;
    std::vector<char> has_main(r.rows.size());
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
      has_main[i] = !r.rows[i].empty();
      if (!has_main[i]) {
        st.rows.emplace_back();
        st.passengers.push_back(std::move(r.passengers[i]));
      } else {
        main.push_back(std::move(r.rows[i]));
      }
    }
    Integer g = content(main);
    if (main.empty() || g == 1) {
      std::size_t mi = 0;
      for (std::size_t i = 0; i < r.passengers.size(); ++i) {
        if (!has_main[i]) continue;
        st.rows.push_back(std::move(main[mi++]));
        st.passengers.push_back(std::move(r.passengers[i]));
      }
      return st;
    }
    st.scale *= g;
    rows.clear();
    std::size_t mi = 0;
    for (std::size_t i = 0; i < r.passengers.size(); ++i) {
      if (!has_main[i]) continue;
      std::vector<MatrixEntry> row = std::move(main[mi++]);
      for (auto& e : row) e.value /= g;
      for (auto& e : r.passengers[i]) row.push_back({ncols + e.row, e.value});
      rows.push_back(std::move(row));
    }
  }
}

}  // namespace

SnfResult smith_normal_form(const SparseIntMatrix& m, bool want_transforms) {
  if (want_transforms) return dense_smith_normal_form(m.dense(), m.cols(), true);
  Staged st = staged_reduce(m.transpose(), {});
  std::vector<std::vector<MatrixEntry>> block;
  for (auto& r : st.rows)
    if (!r.empty()) block.push_back(std::move(r));
  std::size_t k = 0;
  DenseIntMatrix d = densify(block, k);
  if (std::getenv("MATCHCX_TRACE"))
    std::fprintf(stderr, "snf %zux%zu stages=%zu residual=%zux%zu scale=%s\n", m.rows(), m.cols(), st.stages.size(),
                 d.size(), k, st.scale.get_str().c_str());
  SnfResult tail = dense_smith_normal_form(std::move(d), k, false);
  SnfResult res;
  for (const auto& [v, c] : st.stages) res.invariant_factors.insert(res.invariant_factors.end(), c, v);
  for (const auto& f : tail.invariant_factors) res.invariant_factors.push_back(f * st.scale);
  res.rank = res.invariant_factors.size();
  return res;
}

std::vector<std::optional<Integer>> cokernel_orders(const SparseIntMatrix& m, const std::vector<SparseVector>& vs) {
  Staged st = staged_reduce(m, vs);
  std::vector<std::optional<Integer>> out(vs.size(), Integer(1));
  for (const auto& [scale, pp] : st.scaled_pivot_passengers)
    for (const auto& e : pp)
      if (out[e.row]) out[e.row] = lcm(*out[e.row], Integer(scale / gcd(scale, e.value)));
  std::vector<std::vector<MatrixEntry>> block_rows;
  std::vector<std::vector<MatrixEntry>> block_pass;
  for (std::size_t i = 0; i < st.rows.size(); ++i) {
    if (st.rows[i].empty()) {
      for (const auto& e : st.passengers[i]) out[e.row] = std::nullopt;
      continue;
    }
    block_rows.push_back(std::move(st.rows[i]));
    block_pass.push_back(std::move(st.passengers[i]));
  }
  std::size_t k = 0;
  DenseIntMatrix d = densify(block_rows, k);
  DenseIntMatrix P(block_rows.size(), std::vector<Integer>(vs.size(), 0));
  for (std::size_t i = 0; i < block_pass.size(); ++i)
    for (const auto& e : block_pass[i]) P[i][e.row] = e.value;
  SnfResult tail = dense_smith_normal_form(std::move(d), k, false, &P);
  for (std::size_t q = 0; q < vs.size(); ++q) {
    if (!out[q]) continue;
    Integer order = *out[q];
    for (std::size_t i = 0; i < P.size(); ++i) {
      if (P[i][q] == 0) continue;
      if (i >= tail.rank) {
        out[q] = std::nullopt;
        break;
      }
      Integer di = tail.invariant_factors[i] * st.scale;
      Integer g = gcd(di, P[i][q]);
      order = lcm(order, Integer(di / g));
    }
    if (out[q]) out[q] = order;
  }
  return out;
}

namespace {

template <class F>
std::size_t field_rank(const SparseIntMatrix& m, F field) {
  using P = detail::FieldPolicy<F>;
  P policy{field};
  std::vector<typename detail::Eliminator<P>::Row> rows(m.rows());
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (const auto& e : m.column(c)) {
      auto v = field.from_integer(e.value);
      if (field.is_zero(v)) continue;
      rows[e.row].idx.push_back(static_cast<std::uint32_t>(c));
      rows[e.row].val.push_back(v);
    }
  detail::Eliminator<P> elim(policy, m.cols(), std::move(rows));
  return elim.run();
}

SparseVector combine(const Integer& a, const SparseVector& x, const Integer& b, const SparseVector& y) {
  SparseVector out;
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].row < y[j].row)) {
      out.push_back({x[i].row, a * x[i].value});
      ++i;
    } else if (i == x.size() || y[j].row < x[i].row) {
      out.push_back({y[j].row, b * y[j].value});
      ++j;
    } else {
      Integer v = a * x[i].value + b * y[j].value;
      if (v != 0) out.push_back({x[i].row, v});
      ++i;
      ++j;
    }
  }
  std::erase_if(out, [](const MatrixEntry& e) { return e.value == 0; });
  return out;
}

}  // namespace

std::size_t rank_mod_p(const SparseIntMatrix& m, std::uint32_t p) { return field_rank(m, ModPField(p)); }

std::size_t rank_rational(const SparseIntMatrix& m) { return field_rank(m, RationalField{}); }

std::vector<SparseVector> integer_kernel_basis(const SparseIntMatrix& m) {
  const std::size_t n = m.cols();
  std::vector<SparseVector> cols(n), trans(n);
  std::vector<std::size_t> pivot_of(m.rows(), SIZE_MAX);
  std::vector<SparseVector> kernel;
  for (std::size_t j = 0; j < n; ++j) {
    auto c = m.column(j);
    SparseVector v(c.begin(), c.end());
    SparseVector t{{j, Integer(1)}};
    while (!v.empty()) {
      std::size_t low = v.back().row;
      std::size_t k = pivot_of[low];
      if (k == SIZE_MAX) {
        pivot_of[low] = j;
        break;
      }
      const Integer a = v.back().value;
      const Integer b = cols[k].back().value;
      if (mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) {
        Integer q = a / b;
        v = combine(1, v, -q, cols[k]);
        t = combine(1, t, -q, trans[k]);
        continue;
      }
      Integer g, s, u;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), u.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      Integer bg = b / g, ag = a / g;
      SparseVector nv = combine(bg, v, -ag, cols[k]);
      SparseVector nt = combine(bg, t, -ag, trans[k]);
      cols[k] = combine(s, v, u, cols[k]);
      trans[k] = combine(s, t, u, trans[k]);
      v = std::move(nv);
      t = std::move(nt);
    }
    if (v.empty())
      kernel.push_back(std::move(t));
    else {
      cols[j] = std::move(v);
      trans[j] = std::move(t);
    }
  }
  return kernel;
}

}  // namespace matchcx
