#pragma once

#include "matchcx/field.hpp"
#include "matchcx/homology.hpp"
#include "matchcx/sparse_matrix.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace matchcx {

template <class F>
using FieldVector = std::vector<std::pair<std::size_t, typename F::Elem>>;

template <class F>
using FieldMatrix = std::vector<std::vector<typename F::Elem>>;

template <class F>
FieldVector<F> field_column(const F& f, const SparseIntMatrix& m, std::size_t j) {
  FieldVector<F> v;
  for (const auto& e : m.column(j)) {
    auto x = f.from_integer(e.value);
    if (!f.is_zero(x)) v.emplace_back(e.row, x);
  }
  return v;
}

// x <- x - c * y
template <class F>
void field_axpy(const F& f, FieldVector<F>& x, const typename F::Elem& c, const FieldVector<F>& y) {
  FieldVector<F> out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.push_back(std::move(x[i++]));
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, f.neg(f.mul(c, y[j].second)));
      ++j;
    } else {
      auto z = f.sub(x[i].second, f.mul(c, y[j].second));
      if (!f.is_zero(z)) out.emplace_back(x[i].first, std::move(z));
      ++i;
      ++j;
    }
  }
  x = std::move(out);
}

template <class F>
FieldVector<F> field_apply(const F& f, const SparseIntMatrix& m, const FieldVector<F>& x) {
  FieldVector<F> acc;
  for (const auto& [j, c] : x) {
    FieldVector<F> col = field_column(f, m, j);
    field_axpy(f, acc, f.neg(c), col);
  }
  return acc;
}

// H_d(C; F) with chosen cycle representatives. Coordinates are exact.
template <class F>
class FieldHomology {
 public:
  using Elem = typename F::Elem;
  using Vec = FieldVector<F>;

  FieldHomology(F field, const ChainComplex& c, int d) : f_(std::move(field)), size_(c.rank(d)), pivot_(c.rank(d)) {
    SparseIntMatrix in = c.boundary(d + 1);
    for (std::size_t j = 0; j < in.cols(); ++j) insert(field_column(f_, in, j), -1);
    for (auto& z : kernel(c.boundary(d))) {
      reduce(z);
      if (!z.empty()) {
        reps_.push_back(z);
        insert(std::move(z), static_cast<long>(reps_.size()) - 1);
      }
    }
  }

  const F& field() const { return f_; }
  std::size_t dimension() const { return reps_.size(); }
  std::size_t chain_rank() const { return size_; }
  const std::vector<Vec>& representatives() const { return reps_; }

  // Throws if y is not a cycle.
  std::vector<Elem> coordinates(Vec y) const {
    std::vector<Elem> out(reps_.size(), f_.zero());
    while (!y.empty()) {
      std::size_t low = y.back().first;
      const auto& p = pivot_[low];
      if (!p) throw std::invalid_argument("vector is not a cycle");
      Elem c = f_.div(y.back().second, p->vec.back().second);
      if (p->tag >= 0) out[static_cast<std::size_t>(p->tag)] = f_.add(out[static_cast<std::size_t>(p->tag)], c);
      field_axpy(f_, y, c, p->vec);
    }
    return out;
  }

  bool is_boundary(Vec y) const {
    auto c = coordinates(std::move(y));
    return std::all_of(c.begin(), c.end(), [this](const Elem& e) { return f_.is_zero(e); });
  }

 private:
  struct Pivot {
    Vec vec;
    long tag;
  };

  void reduce(Vec& v) const {
    while (!v.empty()) {
      const auto& p = pivot_[v.back().first];
      if (!p) return;
      field_axpy(f_, v, f_.div(v.back().second, p->vec.back().second), p->vec);
    }
  }

  void insert(Vec v, long tag) {
    reduce(v);
    if (v.empty()) return;
    std::size_t low = v.back().first;
    pivot_[low] = Pivot{std::move(v), tag};
  }

  std::vector<Vec> kernel(const SparseIntMatrix& out) const {
    std::vector<Vec> ker;
    std::vector<std::optional<std::pair<Vec, Vec>>> piv(out.rows());
    for (std::size_t j = 0; j < out.cols(); ++j) {
      Vec v = field_column(f_, out, j);
      Vec t{{j, f_.one()}};
      while (!v.empty()) {
        auto& p = piv[v.back().first];
        if (!p) break;
        Elem c = f_.div(v.back().second, p->first.back().second);
        field_axpy(f_, v, c, p->first);
        field_axpy(f_, t, c, p->second);
      }
      if (v.empty())
        ker.push_back(std::move(t));
      else {
        std::size_t low = v.back().first;
        piv[low] = std::pair{std::move(v), std::move(t)};
      }
    }
    return ker;
  }

  F f_;
  std::size_t size_;
  std::vector<std::optional<Pivot>> pivot_;
  std::vector<Vec> reps_;
};

// Matrix of the map H(src) -> H(dst) induced by a chain map into dst's degree.
template <class F>
FieldMatrix<F> induced_map(const FieldHomology<F>& src, const FieldHomology<F>& dst, const SparseIntMatrix& chain) {
  const F& f = src.field();
  FieldMatrix<F> m(dst.dimension(), std::vector<typename F::Elem>(src.dimension(), f.zero()));
  for (std::size_t j = 0; j < src.dimension(); ++j) {
    auto y = field_apply(f, chain, src.representatives()[j]);
    auto c = dst.coordinates(std::move(y));
    for (std::size_t i = 0; i < c.size(); ++i) m[i][j] = c[i];
  }
  return m;
}

template <class F>
FieldMatrix<F> matmul(const F& f, const FieldMatrix<F>& a, const FieldMatrix<F>& b, std::size_t inner, std::size_t cols) {
  FieldMatrix<F> c(a.size(), std::vector<typename F::Elem>(cols, f.zero()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (f.is_zero(a[i][k])) continue;
      for (std::size_t j = 0; j < cols; ++j) c[i][j] = f.add(c[i][j], f.mul(a[i][k], b[k][j]));
    }
  return c;
}

template <class F>
bool is_zero_matrix(const F& f, const FieldMatrix<F>& a) {
  for (const auto& row : a)
    for (const auto& x : row)
      if (!f.is_zero(x)) return false;
  return true;
}

template <class F>
std::size_t matrix_rank(const F& f, FieldMatrix<F> a, std::size_t cols) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && f.is_zero(a[p][c])) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    auto inv = f.inv(a[r][c]);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || f.is_zero(a[i][c])) continue;
      auto q = f.mul(a[i][c], inv);
      for (std::size_t j = c; j < cols; ++j) a[i][j] = f.sub(a[i][j], f.mul(q, a[r][j]));
    }
    ++r;
  }
  return r;
}

// Inverse of a square matrix; nullopt if singular.
template <class F>
std::optional<FieldMatrix<F>> matrix_inverse(const F& f, FieldMatrix<F> a) {
  const std::size_t n = a.size();
  FieldMatrix<F> inv(n, std::vector<typename F::Elem>(n, f.zero()));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = f.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && f.is_zero(a[p][c])) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    auto s = f.inv(a[c][c]);
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] = f.mul(a[c][j], s);
      inv[c][j] = f.mul(inv[c][j], s);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || f.is_zero(a[i][c])) continue;
      auto q = a[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] = f.sub(a[i][j], f.mul(q, a[c][j]));
        inv[i][j] = f.sub(inv[i][j], f.mul(q, inv[c][j]));
      }
    }
  }
  return inv;
}

}  // namespace matchcx
