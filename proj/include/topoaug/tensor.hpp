#pragma once

#include <functional>
#include <memory>
#include <unordered_set>
#include <vector>

#include "topoaug/rng.hpp"
#include "topoaug/sparse.hpp"
#include "topoaug/types.hpp"

namespace topoaug {

// Dense 2-D tensor of 64-bit reals. grad stays empty until backward (or an
// optimizer) needs it. requires_grad marks trainable leaves; op outputs
// inherit it from their inputs so backward skips dead branches.
struct Tensor {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> values;
  std::vector<double> grad;
  bool requires_grad = false;

  Tensor() = default;
  Tensor(std::size_t r, std::size_t c, double fill = 0.0)
      : rows(r), cols(c), values(r * c, fill) {}

  double& at(std::size_t r, std::size_t c) { return values[r * cols + c]; }
  double at(std::size_t r, std::size_t c) const { return values[r * cols + c]; }
  std::size_t size() const { return values.size(); }
  bool is_scalar() const { return rows == 1 && cols == 1; }

  void ensure_grad() {
    if (grad.size() != values.size()) grad.assign(values.size(), 0.0);
  }
  void zero_grad() {
    if (!grad.empty()) grad.assign(values.size(), 0.0);
  }

  static std::shared_ptr<Tensor> make(std::size_t r, std::size_t c,
                                      double fill = 0.0,
                                      bool requires_grad = false);
  static std::shared_ptr<Tensor> from_matrix(const DenseMatrix& m,
                                             bool requires_grad = false);
  // Glorot-uniform init: U(-a, a) with a = sqrt(6 / (rows + cols)).
  static std::shared_ptr<Tensor> glorot(std::size_t r, std::size_t c, Rng& rng);
};

using TensorPtr = std::shared_ptr<Tensor>;

// Reverse-mode tape. Ops execute eagerly and append their adjoint rule; the
// record order is the topological order, so backward is a single reverse
// sweep. backward() consumes the tape.
class Tape {
 public:
  TensorPtr matmul(const TensorPtr& a, const TensorPtr& b);
  TensorPtr spmm(const SparsePtr& s, const TensorPtr& x);
  TensorPtr add(const TensorPtr& a, const TensorPtr& b);
  // bias is 1 x cols, broadcast over rows.
  TensorPtr add_bias(const TensorPtr& x, const TensorPtr& bias);
  TensorPtr relu(const TensorPtr& x);
  TensorPtr concat_cols(const TensorPtr& a, const TensorPtr& b);
  // Keeps each entry with probability 1-p and scales it by 1/(1-p);
  // identity when not training.
  TensorPtr dropout(const TensorPtr& x, double p, bool training, Rng& rng);
  TensorPtr log_softmax(const TensorPtr& x);
  TensorPtr sum(const TensorPtr& x);

  // Mean of -log_prob[target] over the masked rows.
  TensorPtr nll_loss(const TensorPtr& log_probs, const std::vector<int>& targets,
                     const std::vector<std::size_t>& mask);
  // Mean squared residual over all entries of the masked rows.
  TensorPtr mse_loss(const TensorPtr& pred, const DenseMatrix& targets,
                     const std::vector<std::size_t>& mask);

  // Accumulates adjoints into every requires_grad tensor reachable from
  // loss, then clears the tape.
  void backward(const TensorPtr& loss);

  std::size_t size() const { return steps_.size(); }
  void clear();

 private:
  struct Step {
    TensorPtr out;
    std::function<void()> adjoint;
  };

  TensorPtr record(TensorPtr out, std::function<void()> adjoint);

  std::vector<Step> steps_;
  std::unordered_set<const Tensor*> outputs_;
};

}  // namespace topoaug
