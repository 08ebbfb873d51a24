#include "topoaug/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

namespace topoaug {

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols,
                           std::vector<std::size_t> row_ptr,
                           std::vector<std::uint32_t> col_idx,
                           std::vector<double> values)
    : rows_(rows),
      cols_(cols),
      row_ptr_(std::move(row_ptr)),
      col_idx_(std::move(col_idx)),
      values_(std::move(values)) {
  validate();
}

SparseMatrix SparseMatrix::from_triplets(
    std::size_t rows, std::size_t cols,
    std::vector<std::tuple<std::uint32_t, std::uint32_t, double>> triplets) {
  std::erase_if(triplets, [](const auto& t) { return std::get<2>(t) == 0.0; });
  std::sort(triplets.begin(), triplets.end(),
            [](const auto& a, const auto& b) {
              return std::tie(std::get<0>(a), std::get<1>(a)) <
                     std::tie(std::get<0>(b), std::get<1>(b));
            });
  std::vector<std::size_t> row_ptr(rows + 1, 0);
  std::vector<std::uint32_t> col_idx;
  std::vector<double> values;
  col_idx.reserve(triplets.size());
  values.reserve(triplets.size());
  for (const auto& [r, c, v] : triplets) {
    if (r >= rows || c >= cols)
      throw ValidationError("sparse triplet (" + std::to_string(r) + "," +
                            std::to_string(c) + ") out of range");
    row_ptr[r + 1]++;
    col_idx.push_back(c);
    values.push_back(v);
  }
  for (std::size_t r = 0; r < rows; ++r) row_ptr[r + 1] += row_ptr[r];
  return SparseMatrix(rows, cols, std::move(row_ptr), std::move(col_idx),
                      std::move(values));
}

SparseMatrix SparseMatrix::transpose() const {
  std::vector<std::size_t> t_row_ptr(cols_ + 1, 0);
  for (std::uint32_t c : col_idx_) t_row_ptr[c + 1]++;
  for (std::size_t c = 0; c < cols_; ++c) t_row_ptr[c + 1] += t_row_ptr[c];
  std::vector<std::uint32_t> t_col(nnz());
  std::vector<double> t_val(nnz());
  std::vector<std::size_t> cursor(t_row_ptr.begin(), t_row_ptr.end() - 1);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
      const std::size_t pos = cursor[col_idx_[k]]++;
      t_col[pos] = static_cast<std::uint32_t>(r);
      t_val[pos] = values_[k];
    }
  }
  return SparseMatrix(cols_, rows_, std::move(t_row_ptr), std::move(t_col),
                      std::move(t_val));
}

DenseMatrix SparseMatrix::to_dense() const {
  DenseMatrix d(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k)
      d(r, col_idx_[k]) = values_[k];
  return d;
}

bool SparseMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  const SparseMatrix t = transpose();
  return t.row_ptr_ == row_ptr_ && t.col_idx_ == col_idx_ &&
         t.values_ == values_;
}

void SparseMatrix::validate() const {
  if (row_ptr_.size() != rows_ + 1)
    throw ValidationError("sparse row_ptr length mismatch");
  if (row_ptr_.front() != 0 || row_ptr_.back() != col_idx_.size() ||
      col_idx_.size() != values_.size())
    throw ValidationError("sparse storage size mismatch");
  for (std::size_t r = 0; r < rows_; ++r) {
    if (row_ptr_[r] > row_ptr_[r + 1])
      throw ValidationError("sparse row_ptr not monotone");
    for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
      if (col_idx_[k] >= cols_)
        throw ValidationError("sparse column index out of range in row " +
                              std::to_string(r));
      if (k > row_ptr_[r] && col_idx_[k] <= col_idx_[k - 1])
        throw ValidationError("sparse columns not strictly increasing in row " +
                              std::to_string(r));
      if (values_[k] == 0.0)
        throw ValidationError("sparse matrix stores explicit zero");
      if (!std::isfinite(values_[k]))
        throw ValidationError("sparse matrix stores non-finite value");
    }
  }
}

}  // namespace topoaug
