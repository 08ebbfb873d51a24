#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "topoaug/types.hpp"

namespace topoaug {

// CSR matrix of 64-bit reals. Column indices are strictly increasing within
// each row and explicit zeros are never stored.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols,
               std::vector<std::size_t> row_ptr,
               std::vector<std::uint32_t> col_idx,
               std::vector<double> values);

  // Builds from (row, col, value) triplets in any order; duplicates are an
  // error, zeros are dropped.
  static SparseMatrix from_triplets(
      std::size_t rows, std::size_t cols,
      std::vector<std::tuple<std::uint32_t, std::uint32_t, double>> triplets);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nnz() const { return col_idx_.size(); }

  std::span<const std::uint32_t> row_cols(std::size_t r) const {
    return {col_idx_.data() + row_ptr_[r], row_ptr_[r + 1] - row_ptr_[r]};
  }
  std::span<const double> row_vals(std::size_t r) const {
    return {values_.data() + row_ptr_[r], row_ptr_[r + 1] - row_ptr_[r]};
  }

  const std::vector<std::size_t>& row_ptr() const { return row_ptr_; }
  const std::vector<std::uint32_t>& col_idx() const { return col_idx_; }
  const std::vector<double>& values() const { return values_; }

  SparseMatrix transpose() const;
  DenseMatrix to_dense() const;
  bool is_symmetric() const;

  // Throws ValidationError if the CSR invariants are violated.
  void validate() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::size_t> row_ptr_ = {0};
  std::vector<std::uint32_t> col_idx_;
  std::vector<double> values_;
};

using SparsePtr = std::shared_ptr<const SparseMatrix>;

}  // namespace topoaug
