#include "matchcx/sparse_matrix.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace matchcx {

SparseIntMatrix::SparseIntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), start_(cols + 1, 0) {}

SparseIntMatrix SparseIntMatrix::from_triplets(std::size_t rows, std::size_t cols, std::vector<Triplet> ts) {
  std::sort(ts.begin(), ts.end(), [](const Triplet& a, const Triplet& b) {
    return a.col != b.col ? a.col < b.col : a.row < b.row;
  });
  SparseIntMatrix m;
  m.rows_ = rows;
  std::size_t i = 0;
  for (std::size_t c = 0; c < cols; ++c) {
    std::vector<MatrixEntry> col;
    while (i < ts.size() && ts[i].col == c) {
      if (ts[i].row >= rows) throw std::out_of_range("triplet row out of range");
      if (!col.empty() && col.back().row == ts[i].row)
        col.back().value += ts[i].value;
      else
        col.push_back({ts[i].row, ts[i].value});
      ++i;
    }
    m.append_column(std::move(col));
  }
  if (i != ts.size()) throw std::out_of_range("triplet column out of range");
  return m;
}

SparseIntMatrix SparseIntMatrix::from_dense(const DenseIntMatrix& d, std::size_t cols) {
  SparseIntMatrix m;
  m.rows_ = d.size();
  for (std::size_t c = 0; c < cols; ++c) {
    std::vector<MatrixEntry> col;
    for (std::size_t r = 0; r < d.size(); ++r)
      if (d[r].at(c) != 0) col.push_back({r, d[r][c]});
    m.append_column(std::move(col));
  }
  return m;
}

SparseIntMatrix SparseIntMatrix::identity(std::size_t n) {
  SparseIntMatrix m;
  m.rows_ = n;
  for (std::size_t c = 0; c < n; ++c) m.append_column({{c, Integer(1)}});
  return m;
}

void SparseIntMatrix::append_column(std::vector<MatrixEntry> col) {
  std::sort(col.begin(), col.end(), [](const MatrixEntry& a, const MatrixEntry& b) { return a.row < b.row; });
  for (std::size_t k = 0; k < col.size(); ++k) {
    if (col[k].row >= rows_) throw std::out_of_range("column entry row out of range");
    if (k + 1 < col.size() && col[k + 1].row == col[k].row) {
      col[k + 1].value += col[k].value;
      continue;
    }
    if (col[k].value != 0) entries_.push_back(std::move(col[k]));
  }
  ++cols_;
  start_.push_back(entries_.size());
}

std::span<const MatrixEntry> SparseIntMatrix::column(std::size_t j) const {
  if (j >= cols_) throw std::out_of_range("column index");
  return {entries_.data() + start_[j], start_[j + 1] - start_[j]};
}

Integer SparseIntMatrix::at(std::size_t r, std::size_t c) const {
  auto col = column(c);
  auto it = std::lower_bound(col.begin(), col.end(), r, [](const MatrixEntry& e, std::size_t x) { return e.row < x; });
  if (it != col.end() && it->row == r) return it->value;
  return 0;
}

SparseIntMatrix SparseIntMatrix::transpose() const {
  std::vector<std::vector<MatrixEntry>> cols(rows_);
  for (std::size_t c = 0; c < cols_; ++c)
    for (const auto& e : column(c)) cols[e.row].push_back({c, e.value});
  SparseIntMatrix t;
  t.rows_ = cols_;
  for (auto& col : cols) t.append_column(std::move(col));
  return t;
}

DenseIntMatrix SparseIntMatrix::dense() const {
  DenseIntMatrix d(rows_, std::vector<Integer>(cols_, 0));
  for (std::size_t c = 0; c < cols_; ++c)
    for (const auto& e : column(c)) d[e.row][c] = e.value;
  return d;
}

SparseIntMatrix SparseIntMatrix::hconcat(const SparseIntMatrix& other) const {
  if (other.rows_ != rows_) throw std::invalid_argument("hconcat row mismatch");
  SparseIntMatrix m = *this;
  for (std::size_t c = 0; c < other.cols_; ++c) {
    auto col = other.column(c);
    m.append_column({col.begin(), col.end()});
  }
  return m;
}

SparseIntMatrix operator*(const SparseIntMatrix& a, const SparseIntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
  SparseIntMatrix m(a.rows_, 0);
  m.start_ = {0};
  m.cols_ = 0;
  for (std::size_t c = 0; c < b.cols_; ++c) {
    std::map<std::size_t, Integer> acc;
    for (const auto& e : b.column(c))
      for (const auto& f : a.column(e.row)) acc[f.row] += f.value * e.value;
    std::vector<MatrixEntry> col;
    for (auto& [r, v] : acc)
      if (v != 0) col.push_back({r, v});
    m.append_column(std::move(col));
  }
  return m;
}

SparseIntMatrix operator+(const SparseIntMatrix& a, const SparseIntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum dimension mismatch");
  SparseIntMatrix m(a.rows_, 0);
  m.start_ = {0};
  m.cols_ = 0;
  for (std::size_t c = 0; c < a.cols_; ++c) {
    auto x = a.column(c);
    auto y = b.column(c);
    std::vector<MatrixEntry> col(x.begin(), x.end());
    col.insert(col.end(), y.begin(), y.end());
    m.append_column(std::move(col));
  }
  return m;
}

SparseIntMatrix operator-(const SparseIntMatrix& a) {
  SparseIntMatrix m = a;
  for (auto& e : m.entries_) e.value = -e.value;
  return m;
}

bool SparseIntMatrix::operator==(const SparseIntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || entries_.size() != o.entries_.size()) return false;
  if (start_ != o.start_) return false;
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i].row != o.entries_[i].row || entries_[i].value != o.entries_[i].value) return false;
  return true;
}

SparseVector normalize(SparseVector v) {
  std::sort(v.begin(), v.end(), [](const MatrixEntry& a, const MatrixEntry& b) { return a.row < b.row; });
  SparseVector out;
  for (auto& e : v) {
    if (!out.empty() && out.back().row == e.row)
      out.back().value += e.value;
    else
      out.push_back(std::move(e));
  }
  std::erase_if(out, [](const MatrixEntry& e) { return e.value == 0; });
  return out;
}

SparseVector multiply(const SparseIntMatrix& a, const SparseVector& x) {
  SparseVector out;
  for (const auto& e : x)
    for (const auto& f : a.column(e.row)) out.push_back({f.row, f.value * e.value});
  return normalize(std::move(out));
}

}  // namespace matchcx
