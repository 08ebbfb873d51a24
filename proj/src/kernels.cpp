#include "topoaug/kernels.hpp"

#include <cmath>
#include <cstdint>

namespace topoaug::kernels {

namespace {

// Distance test shared by both pairs_within_tau variants. Euclidean compares
// squared distances against tau^2; cosine compares 1 - cos(a,b) against tau.
bool within_tau(const DenseMatrix& emb, std::size_t i, std::size_t j,
                double tau, Metric metric) {
  const double* a = emb.data.data() + i * emb.cols;
  const double* b = emb.data.data() + j * emb.cols;
  if (metric == Metric::euclidean) {
    double d2 = 0.0;
    for (std::size_t c = 0; c < emb.cols; ++c) {
      const double d = a[c] - b[c];
      d2 += d * d;
    }
    return d2 <= tau * tau;
  }
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (std::size_t c = 0; c < emb.cols; ++c) {
    dot += a[c] * b[c];
    na += a[c] * a[c];
    nb += b[c] * b[c];
  }
  return 1.0 - dot / std::sqrt(na * nb) <= tau;
}

void check_embeddings(const DenseMatrix& emb, Metric metric) {
  for (std::size_t i = 0; i < emb.rows; ++i) {
    double norm2 = 0.0;
    for (std::size_t c = 0; c < emb.cols; ++c) {
      const double v = emb(i, c);
      if (!std::isfinite(v))
        throw ValidationError("non-finite embedding value at row " +
                              std::to_string(i));
      norm2 += v * v;
    }
    if (metric == Metric::cosine_distance && norm2 == 0.0)
      throw ValidationError("zero-norm embedding row " + std::to_string(i) +
                            " under cosine metric");
  }
}

}  // namespace

void matmul(const double* a, std::size_t n, std::size_t m,
            const double* b, std::size_t p, double* out) {
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
    double* out_row = out + i * p;
    for (std::size_t c = 0; c < p; ++c) out_row[c] = 0.0;
    const double* a_row = a + i * m;
    for (std::size_t k = 0; k < m; ++k) {
      const double av = a_row[k];
      const double* b_row = b + k * p;
      for (std::size_t c = 0; c < p; ++c) out_row[c] += av * b_row[c];
    }
  }
}

void matmul_tn_accum(const double* a, std::size_t n, std::size_t m,
                     const double* b, std::size_t p, double* out) {
#pragma omp parallel for schedule(static)
  for (std::int64_t r = 0; r < static_cast<std::int64_t>(m); ++r) {
    double* out_row = out + r * p;
    for (std::size_t i = 0; i < n; ++i) {
      const double av = a[i * m + r];
      const double* b_row = b + i * p;
      for (std::size_t c = 0; c < p; ++c) out_row[c] += av * b_row[c];
    }
  }
}

void matmul_nt_accum(const double* a, std::size_t n, std::size_t p,
                     const double* b, std::size_t m, double* out) {
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
    const double* a_row = a + i * p;
    double* out_row = out + i * m;
    for (std::size_t j = 0; j < m; ++j) {
      const double* b_row = b + j * p;
      double acc = 0.0;
      for (std::size_t c = 0; c < p; ++c) acc += a_row[c] * b_row[c];
      out_row[j] += acc;
    }
  }
}

void spmm(const SparseMatrix& s, const double* x, std::size_t k, double* out) {
#pragma omp parallel for schedule(static)
  for (std::int64_t r = 0; r < static_cast<std::int64_t>(s.rows()); ++r) {
    double* out_row = out + r * k;
    for (std::size_t c = 0; c < k; ++c) out_row[c] = 0.0;
    const auto cols = s.row_cols(r);
    const auto vals = s.row_vals(r);
    for (std::size_t e = 0; e < cols.size(); ++e) {
      const double* x_row = x + static_cast<std::size_t>(cols[e]) * k;
      const double v = vals[e];
      for (std::size_t c = 0; c < k; ++c) out_row[c] += v * x_row[c];
    }
  }
}

void spmm_transposed_accum(const SparseMatrix& s, const double* dy,
                           std::size_t k, double* accum) {
  // Parallel over feature columns: each thread owns column c for every
  // output row, so the scattered accum[col] updates never race.
#pragma omp parallel for schedule(static)
  for (std::int64_t c = 0; c < static_cast<std::int64_t>(k); ++c) {
    for (std::size_t r = 0; r < s.rows(); ++r) {
      const auto cols = s.row_cols(r);
      const auto vals = s.row_vals(r);
      const double dy_rc = dy[r * k + c];
      for (std::size_t e = 0; e < cols.size(); ++e)
        accum[static_cast<std::size_t>(cols[e]) * k + c] += vals[e] * dy_rc;
    }
  }
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs_within_tau(
    const DenseMatrix& emb, double tau, Metric metric) {
  check_embeddings(emb, metric);
  const std::size_t n = emb.rows;
  std::vector<std::vector<std::uint32_t>> hits(n);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (within_tau(emb, i, j, tau, metric))
        hits[i].push_back(static_cast<std::uint32_t>(j));
    }
  }
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::uint32_t j : hits[i])
      pairs.emplace_back(static_cast<std::uint32_t>(i), j);
  return pairs;
}

namespace serial {

void matmul(const double* a, std::size_t n, std::size_t m,
            const double* b, std::size_t p, double* out) {
  for (std::size_t i = 0; i < n; ++i) {
    double* out_row = out + i * p;
    for (std::size_t c = 0; c < p; ++c) out_row[c] = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
      const double av = a[i * m + k];
      const double* b_row = b + k * p;
      for (std::size_t c = 0; c < p; ++c) out_row[c] += av * b_row[c];
    }
  }
}

void matmul_tn_accum(const double* a, std::size_t n, std::size_t m,
                     const double* b, std::size_t p, double* out) {
  for (std::size_t r = 0; r < m; ++r) {
    double* out_row = out + r * p;
    for (std::size_t i = 0; i < n; ++i) {
      const double av = a[i * m + r];
      const double* b_row = b + i * p;
      for (std::size_t c = 0; c < p; ++c) out_row[c] += av * b_row[c];
    }
  }
}

void matmul_nt_accum(const double* a, std::size_t n, std::size_t p,
                     const double* b, std::size_t m, double* out) {
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      double acc = 0.0;
      for (std::size_t c = 0; c < p; ++c) acc += a[i * p + c] * b[j * p + c];
      out[i * m + j] += acc;
    }
  }
}

void spmm(const SparseMatrix& s, const double* x, std::size_t k, double* out) {
  for (std::size_t r = 0; r < s.rows(); ++r) {
    double* out_row = out + r * k;
    for (std::size_t c = 0; c < k; ++c) out_row[c] = 0.0;
    const auto cols = s.row_cols(r);
    const auto vals = s.row_vals(r);
    for (std::size_t e = 0; e < cols.size(); ++e) {
      const double* x_row = x + static_cast<std::size_t>(cols[e]) * k;
      for (std::size_t c = 0; c < k; ++c) out_row[c] += vals[e] * x_row[c];
    }
  }
}

void spmm_transposed_accum(const SparseMatrix& s, const double* dy,
                           std::size_t k, double* accum) {
  for (std::size_t r = 0; r < s.rows(); ++r) {
    const auto cols = s.row_cols(r);
    const auto vals = s.row_vals(r);
    for (std::size_t e = 0; e < cols.size(); ++e) {
      double* acc_row = accum + static_cast<std::size_t>(cols[e]) * k;
      const double* dy_row = dy + r * k;
      for (std::size_t c = 0; c < k; ++c) acc_row[c] += vals[e] * dy_row[c];
    }
  }
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs_within_tau(
    const DenseMatrix& emb, double tau, Metric metric) {
  check_embeddings(emb, metric);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (std::size_t i = 0; i < emb.rows; ++i)
    for (std::size_t j = i + 1; j < emb.rows; ++j)
      if (within_tau(emb, i, j, tau, metric))
        pairs.emplace_back(static_cast<std::uint32_t>(i),
                           static_cast<std::uint32_t>(j));
  return pairs;
}

}  // namespace serial

}  // namespace topoaug::kernels
