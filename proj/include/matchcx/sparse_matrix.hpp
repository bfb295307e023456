#pragma once

#include "matchcx/integer.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace matchcx {

struct MatrixEntry {
  std::size_t row = 0;
  Integer value;
};

struct Triplet {
  std::size_t row = 0;
  std::size_t col = 0;
  Integer value;
};

using DenseIntMatrix = std::vector<std::vector<Integer>>;

// Compressed-column integer matrix. Entries are nonzero and sorted by row
// within each column.
class SparseIntMatrix {
 public:
  SparseIntMatrix() = default;
  SparseIntMatrix(std::size_t rows, std::size_t cols);

  // Duplicates are summed; zeros dropped.
  static SparseIntMatrix from_triplets(std::size_t rows, std::size_t cols, std::vector<Triplet> ts);
  static SparseIntMatrix from_dense(const DenseIntMatrix& d, std::size_t cols);
  static SparseIntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nnz() const { return entries_.size(); }
  std::span<const MatrixEntry> column(std::size_t j) const;
  Integer at(std::size_t r, std::size_t c) const;
  bool is_zero() const { return entries_.empty(); }

  SparseIntMatrix transpose() const;
  DenseIntMatrix dense() const;
  // Adds columns of other to the right.
  SparseIntMatrix hconcat(const SparseIntMatrix& other) const;

  friend SparseIntMatrix operator*(const SparseIntMatrix& a, const SparseIntMatrix& b);
  friend SparseIntMatrix operator+(const SparseIntMatrix& a, const SparseIntMatrix& b);
  friend SparseIntMatrix operator-(const SparseIntMatrix& a);
  friend SparseIntMatrix operator-(const SparseIntMatrix& a, const SparseIntMatrix& b) { return a + (-b); }
  bool operator==(const SparseIntMatrix& o) const;

  // Incremental construction, one column at a time.
  void append_column(std::vector<MatrixEntry> col);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::size_t> start_{0};
  std::vector<MatrixEntry> entries_;
};

// Sparse vector helpers on sorted (index, value) lists.
using SparseVector = std::vector<MatrixEntry>;
SparseVector normalize(SparseVector v);
SparseVector multiply(const SparseIntMatrix& a, const SparseVector& x);

}  // namespace matchcx
