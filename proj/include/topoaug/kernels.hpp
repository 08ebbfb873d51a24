#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "topoaug/sparse.hpp"

namespace topoaug::kernels {

// Dense/sparse inner loops shared by the tensor ops. The default entry
// points are OpenMP-parallel over independent output elements, so results
// are bit-identical for any thread count. kernels::serial holds plain-loop
// reference versions used by the tests and the benchmark tool.

// out(n,p) = a(n,m) * b(m,p)
void matmul(const double* a, std::size_t n, std::size_t m,
            const double* b, std::size_t p, double* out);

// out(m,p) += a(n,m)^T * b(n,p)
void matmul_tn_accum(const double* a, std::size_t n, std::size_t m,
                     const double* b, std::size_t p, double* out);

// out(n,m) += a(n,p) * b(m,p)^T
void matmul_nt_accum(const double* a, std::size_t n, std::size_t p,
                     const double* b, std::size_t m, double* out);

// out(rows,k) = s * x(cols,k)
void spmm(const SparseMatrix& s, const double* x, std::size_t k, double* out);

// accum(cols,k) += s^T * dy(rows,k), without materializing s^T.
void spmm_transposed_accum(const SparseMatrix& s, const double* dy,
                           std::size_t k, double* accum);

enum class Metric { euclidean, cosine_distance };

// All unordered pairs (i, j), i < j, whose embedding distance is <= tau.
// Rows of `emb` are points. Pair order is (i asc, j asc) regardless of
// schedule. Cosine distance is 1 - cosine similarity; zero-norm rows are a
// ValidationError under the cosine metric.
std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs_within_tau(
    const DenseMatrix& emb, double tau, Metric metric);

namespace serial {

void matmul(const double* a, std::size_t n, std::size_t m,
            const double* b, std::size_t p, double* out);
void matmul_tn_accum(const double* a, std::size_t n, std::size_t m,
                     const double* b, std::size_t p, double* out);
void matmul_nt_accum(const double* a, std::size_t n, std::size_t p,
                     const double* b, std::size_t m, double* out);
void spmm(const SparseMatrix& s, const double* x, std::size_t k, double* out);
void spmm_transposed_accum(const SparseMatrix& s, const double* dy,
                           std::size_t k, double* accum);
std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs_within_tau(
    const DenseMatrix& emb, double tau, Metric metric);

}  // namespace serial

}  // namespace topoaug::kernels
