#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace topoaug {

using NodeId = std::uint32_t;

// Raised on malformed input: bad files, out-of-range indices, violated
// preconditions. The CLI maps it to exit code 1; everything else is 2.
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Row-major dense matrix of 64-bit reals.
struct DenseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  DenseMatrix() = default;
  DenseMatrix(std::size_t r, std::size_t c, double fill = 0.0)
      : rows(r), cols(c), data(r * c, fill) {}

  double& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

  bool same_shape(const DenseMatrix& other) const {
    return rows == other.rows && cols == other.cols;
  }
};

}  // namespace topoaug
