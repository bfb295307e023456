#pragma once

#include "matchcx/integer.hpp"
#include "matchcx/sparse_matrix.hpp"

#include <optional>
#include <vector>

namespace matchcx {

struct SnfResult {
  // Nonzero diagonal entries d_1 | d_2 | ... | d_r, all positive.
  std::vector<Integer> invariant_factors;
  std::size_t rank = 0;
  // With transforms: U * M * V = D, U and V unimodular.
  std::optional<DenseIntMatrix> U;
  std::optional<DenseIntMatrix> V;

  std::vector<Integer> torsion() const;  // factors > 1
};

SnfResult smith_normal_form(const SparseIntMatrix& m, bool want_transforms = false);

// Dense algorithm, exposed for cross-checks. Row operations are also applied
// to the rows of *passengers when given.
SnfResult dense_smith_normal_form(DenseIntMatrix a, std::size_t cols, bool want_transforms,
                                  DenseIntMatrix* passengers = nullptr);

// Order of v + im(M) in Z^rows / im(M). nullopt means infinite order.
std::vector<std::optional<Integer>> cokernel_orders(const SparseIntMatrix& m, const std::vector<SparseVector>& vs);

std::size_t rank_mod_p(const SparseIntMatrix& m, std::uint32_t p);
std::size_t rank_rational(const SparseIntMatrix& m);

// Z-basis of the integer kernel of m, computed by unimodular column reduction.
std::vector<SparseVector> integer_kernel_basis(const SparseIntMatrix& m);

}  // namespace matchcx
