#include "topoaug/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "topoaug/kernels.hpp"

namespace topoaug {

namespace {

std::string shape_str(const Tensor& t) {
  return std::to_string(t.rows) + "x" + std::to_string(t.cols);
}

void require_same_shape(const Tensor& a, const Tensor& b, const char* op) {
  if (a.rows != b.rows || a.cols != b.cols)
    throw ValidationError(std::string(op) + ": shape mismatch " + shape_str(a) +
                          " vs " + shape_str(b));
}

}  // namespace

TensorPtr Tensor::make(std::size_t r, std::size_t c, double fill,
                       bool requires_grad) {
  auto t = std::make_shared<Tensor>(r, c, fill);
  t->requires_grad = requires_grad;
  return t;
}

TensorPtr Tensor::from_matrix(const DenseMatrix& m, bool requires_grad) {
  auto t = std::make_shared<Tensor>(m.rows, m.cols);
  t->values = m.data;
  t->requires_grad = requires_grad;
  return t;
}

TensorPtr Tensor::glorot(std::size_t r, std::size_t c, Rng& rng) {
  auto t = make(r, c, 0.0, true);
  const double a = std::sqrt(6.0 / static_cast<double>(r + c));
  for (double& v : t->values) v = (2.0 * rng.uniform() - 1.0) * a;
  return t;
}

TensorPtr Tape::record(TensorPtr out, std::function<void()> adjoint) {
  outputs_.insert(out.get());
  steps_.push_back({out, std::move(adjoint)});
  return steps_.back().out;
}

TensorPtr Tape::matmul(const TensorPtr& a, const TensorPtr& b) {
  if (a->cols != b->rows)
    throw ValidationError("matmul: shape mismatch " + shape_str(*a) + " * " +
                          shape_str(*b));
  auto out = Tensor::make(a->rows, b->cols);
  out->requires_grad = a->requires_grad || b->requires_grad;
  kernels::matmul(a->values.data(), a->rows, a->cols, b->values.data(), b->cols,
                  out->values.data());
  return record(out, [a, b, out] {
    if (a->requires_grad) {
      a->ensure_grad();
      kernels::matmul_nt_accum(out->grad.data(), out->rows, out->cols,
                               b->values.data(), b->rows, a->grad.data());
    }
    if (b->requires_grad) {
      b->ensure_grad();
      kernels::matmul_tn_accum(a->values.data(), a->rows, a->cols,
                               out->grad.data(), out->cols, b->grad.data());
    }
  });
}

TensorPtr Tape::spmm(const SparsePtr& s, const TensorPtr& x) {
  if (s->cols() != x->rows)
    throw ValidationError("spmm: sparse " + std::to_string(s->rows()) + "x" +
                          std::to_string(s->cols()) + " vs dense " +
                          shape_str(*x));
  auto out = Tensor::make(s->rows(), x->cols);
  out->requires_grad = x->requires_grad;
  kernels::spmm(*s, x->values.data(), x->cols, out->values.data());
  return record(out, [s, x, out] {
    if (!x->requires_grad) return;
    x->ensure_grad();
    kernels::spmm_transposed_accum(*s, out->grad.data(), out->cols,
                                   x->grad.data());
  });
}

TensorPtr Tape::add(const TensorPtr& a, const TensorPtr& b) {
  require_same_shape(*a, *b, "add");
  auto out = Tensor::make(a->rows, a->cols);
  out->requires_grad = a->requires_grad || b->requires_grad;
  for (std::size_t i = 0; i < out->size(); ++i)
    out->values[i] = a->values[i] + b->values[i];
  return record(out, [a, b, out] {
    for (const auto& t : {a, b}) {
      if (!t->requires_grad) continue;
      t->ensure_grad();
      for (std::size_t i = 0; i < out->size(); ++i) t->grad[i] += out->grad[i];
    }
  });
}

TensorPtr Tape::add_bias(const TensorPtr& x, const TensorPtr& bias) {
  if (bias->rows != 1 || bias->cols != x->cols)
    throw ValidationError("add_bias: bias " + shape_str(*bias) +
                          " does not broadcast over " + shape_str(*x));
  auto out = Tensor::make(x->rows, x->cols);
  out->requires_grad = x->requires_grad || bias->requires_grad;
  for (std::size_t r = 0; r < x->rows; ++r)
    for (std::size_t c = 0; c < x->cols; ++c)
      out->at(r, c) = x->at(r, c) + bias->values[c];
  return record(out, [x, bias, out] {
    if (x->requires_grad) {
      x->ensure_grad();
      for (std::size_t i = 0; i < out->size(); ++i) x->grad[i] += out->grad[i];
    }
    if (bias->requires_grad) {
      bias->ensure_grad();
      for (std::size_t c = 0; c < out->cols; ++c) {
        double acc = 0.0;
        for (std::size_t r = 0; r < out->rows; ++r) acc += out->grad[r * out->cols + c];
        bias->grad[c] += acc;
      }
    }
  });
}

TensorPtr Tape::relu(const TensorPtr& x) {
  auto out = Tensor::make(x->rows, x->cols);
  out->requires_grad = x->requires_grad;
  for (std::size_t i = 0; i < x->size(); ++i)
    out->values[i] = x->values[i] > 0.0 ? x->values[i] : 0.0;
  return record(out, [x, out] {
    if (!x->requires_grad) return;
    x->ensure_grad();
    for (std::size_t i = 0; i < x->size(); ++i)
      if (x->values[i] > 0.0) x->grad[i] += out->grad[i];
  });
}

TensorPtr Tape::concat_cols(const TensorPtr& a, const TensorPtr& b) {
  if (a->rows != b->rows)
    throw ValidationError("concat_cols: row mismatch " + shape_str(*a) +
                          " vs " + shape_str(*b));
  auto out = Tensor::make(a->rows, a->cols + b->cols);
  out->requires_grad = a->requires_grad || b->requires_grad;
  for (std::size_t r = 0; r < a->rows; ++r) {
    for (std::size_t c = 0; c < a->cols; ++c) out->at(r, c) = a->at(r, c);
    for (std::size_t c = 0; c < b->cols; ++c) out->at(r, a->cols + c) = b->at(r, c);
  }
  return record(out, [a, b, out] {
    if (a->requires_grad) {
      a->ensure_grad();
      for (std::size_t r = 0; r < a->rows; ++r)
        for (std::size_t c = 0; c < a->cols; ++c)
          a->grad[r * a->cols + c] += out->grad[r * out->cols + c];
    }
    if (b->requires_grad) {
      b->ensure_grad();
      for (std::size_t r = 0; r < b->rows; ++r)
        for (std::size_t c = 0; c < b->cols; ++c)
          b->grad[r * b->cols + c] += out->grad[r * out->cols + a->cols + c];
    }
  });
}

TensorPtr Tape::dropout(const TensorPtr& x, double p, bool training, Rng& rng) {
  if (p < 0.0 || p >= 1.0)
    throw ValidationError("dropout: p must be in [0,1), got " + std::to_string(p));
  if (!training || p == 0.0) {
    auto out = Tensor::make(x->rows, x->cols);
    out->requires_grad = x->requires_grad;
    out->values = x->values;
    return record(out, [x, out] {
      if (!x->requires_grad) return;
      x->ensure_grad();
      for (std::size_t i = 0; i < x->size(); ++i) x->grad[i] += out->grad[i];
    });
  }
  const double scale = 1.0 / (1.0 - p);
  auto mask = std::make_shared<std::vector<double>>(x->size());
  for (double& m : *mask) m = rng.uniform() < p ? 0.0 : scale;
  auto out = Tensor::make(x->rows, x->cols);
  out->requires_grad = x->requires_grad;
  for (std::size_t i = 0; i < x->size(); ++i)
    out->values[i] = x->values[i] * (*mask)[i];
  return record(out, [x, out, mask] {
    if (!x->requires_grad) return;
    x->ensure_grad();
    for (std::size_t i = 0; i < x->size(); ++i)
      x->grad[i] += out->grad[i] * (*mask)[i];
  });
}

TensorPtr Tape::log_softmax(const TensorPtr& x) {
  auto out = Tensor::make(x->rows, x->cols);
  out->requires_grad = x->requires_grad;
  const std::size_t cols = x->cols;
#pragma omp parallel for schedule(static)
  for (std::int64_t r = 0; r < static_cast<std::int64_t>(x->rows); ++r) {
    const double* in_row = x->values.data() + r * cols;
    double* out_row = out->values.data() + r * cols;
    double max_v = in_row[0];
    for (std::size_t c = 1; c < cols; ++c) max_v = std::max(max_v, in_row[c]);
    double sum = 0.0;
    for (std::size_t c = 0; c < cols; ++c) sum += std::exp(in_row[c] - max_v);
    const double lse = max_v + std::log(sum);
    for (std::size_t c = 0; c < cols; ++c) out_row[c] = in_row[c] - lse;
  }
  return record(out, [x, out] {
    if (!x->requires_grad) return;
    x->ensure_grad();
    const std::size_t cols = x->cols;
#pragma omp parallel for schedule(static)
    for (std::int64_t r = 0; r < static_cast<std::int64_t>(x->rows); ++r) {
      const double* g_row = out->grad.data() + r * cols;
      const double* y_row = out->values.data() + r * cols;
      double g_sum = 0.0;
      for (std::size_t c = 0; c < cols; ++c) g_sum += g_row[c];
      double* gx = x->grad.data() + r * cols;
      for (std::size_t c = 0; c < cols; ++c)
        gx[c] += g_row[c] - std::exp(y_row[c]) * g_sum;
    }
  });
}

TensorPtr Tape::sum(const TensorPtr& x) {
  auto out = Tensor::make(1, 1);
  out->requires_grad = x->requires_grad;
  double acc = 0.0;
  for (double v : x->values) acc += v;
  out->values[0] = acc;
  return record(out, [x, out] {
    if (!x->requires_grad) return;
    x->ensure_grad();
    for (std::size_t i = 0; i < x->size(); ++i) x->grad[i] += out->grad[0];
  });
}

TensorPtr Tape::nll_loss(const TensorPtr& log_probs,
                         const std::vector<int>& targets,
                         const std::vector<std::size_t>& mask) {
  if (mask.empty()) throw ValidationError("nll_loss: empty mask");
  if (targets.size() != log_probs->rows)
    throw ValidationError("nll_loss: targets length != rows");
  for (std::size_t r : mask) {
    if (r >= log_probs->rows)
      throw ValidationError("nll_loss: mask index out of range");
    if (targets[r] < 0 || static_cast<std::size_t>(targets[r]) >= log_probs->cols)
      throw ValidationError("nll_loss: target class " +
                            std::to_string(targets[r]) + " out of range");
  }
  auto out = Tensor::make(1, 1);
  out->requires_grad = log_probs->requires_grad;
  double acc = 0.0;
  for (std::size_t r : mask) acc -= log_probs->at(r, targets[r]);
  out->values[0] = acc / static_cast<double>(mask.size());
  auto mask_copy = std::make_shared<std::vector<std::size_t>>(mask);
  auto targets_copy = std::make_shared<std::vector<int>>(targets);
  return record(out, [log_probs, out, mask_copy, targets_copy] {
    if (!log_probs->requires_grad) return;
    log_probs->ensure_grad();
    const double w = out->grad[0] / static_cast<double>(mask_copy->size());
    for (std::size_t r : *mask_copy)
      log_probs->grad[r * log_probs->cols + (*targets_copy)[r]] -= w;
  });
}

TensorPtr Tape::mse_loss(const TensorPtr& pred, const DenseMatrix& targets,
                         const std::vector<std::size_t>& mask) {
  if (mask.empty()) throw ValidationError("mse_loss: empty mask");
  if (targets.rows != pred->rows || targets.cols != pred->cols)
    throw ValidationError("mse_loss: target shape mismatch");
  for (std::size_t r : mask)
    if (r >= pred->rows) throw ValidationError("mse_loss: mask index out of range");
  const double denom = static_cast<double>(mask.size() * pred->cols);
  auto out = Tensor::make(1, 1);
  out->requires_grad = pred->requires_grad;
  double acc = 0.0;
  for (std::size_t r : mask)
    for (std::size_t c = 0; c < pred->cols; ++c) {
      const double d = pred->at(r, c) - targets(r, c);
      acc += d * d;
    }
  out->values[0] = acc / denom;
  auto mask_copy = std::make_shared<std::vector<std::size_t>>(mask);
  auto targets_copy = std::make_shared<DenseMatrix>(targets);
  return record(out, [pred, out, mask_copy, targets_copy, denom] {
    if (!pred->requires_grad) return;
    pred->ensure_grad();
    const double w = 2.0 * out->grad[0] / denom;
    for (std::size_t r : *mask_copy)
      for (std::size_t c = 0; c < pred->cols; ++c)
        pred->grad[r * pred->cols + c] +=
            w * (pred->at(r, c) - (*targets_copy)(r, c));
  });
}

void Tape::backward(const TensorPtr& loss) {
  if (!loss->is_scalar())
    throw ValidationError("backward: loss must be scalar, got " + shape_str(*loss));
  if (!outputs_.count(loss.get()))
    throw ValidationError("backward: loss is not on this tape");
  loss->ensure_grad();
  loss->grad[0] = 1.0;
  for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) {
    it->out->ensure_grad();  // unreached branches keep zero adjoints
    it->adjoint();
  }
  clear();
}

void Tape::clear() {
  steps_.clear();
  outputs_.clear();
}

}  // namespace topoaug
