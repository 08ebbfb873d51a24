#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "topoaug/tensor.hpp"

namespace topoaug {

struct AdamState {
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
  std::size_t step_count = 0;
  std::vector<TensorPtr> params;
  std::vector<std::vector<double>> m;  // first moments, one buffer per param
  std::vector<std::vector<double>> v;  // second moments

  explicit AdamState(std::vector<TensorPtr> parameters);
};

// One bias-corrected Adam update from the grads currently on the params.
// A param with no grad buffer is treated as having zero gradient.
void adam_step(AdamState& state, double lr);

struct CosineSchedule {
  double base_lr = 0.001;
  std::size_t total_steps = 500;
};

// base_lr * (1 + cos(pi * step / total_steps)) / 2; base_lr at step 0,
// exactly 0 at step == total_steps.
double cosine_lr(const CosineSchedule& sched, std::size_t step);

struct GradCheckReport {
  struct Entry {
    std::string name;
    double max_rel_err = 0.0;
  };
  std::vector<Entry> entries;
  double worst = 0.0;
  bool pass(double tolerance) const { return worst < tolerance; }
};

// Central finite differences against the tape's adjoints. `forward` must be
// deterministic (dropout off) and build the scalar loss on the tape it is
// given. Relative error uses |a - n| / max(|a|, |n|, 1e-3), so near-zero
// gradients are judged on absolute error. max_entries_per_param == 0 checks
// every element; otherwise a deterministic stride sample of that many.
GradCheckReport gradient_check(
    const std::function<TensorPtr(Tape&)>& forward,
    const std::vector<std::pair<std::string, TensorPtr>>& params,
    double fd_step = 1e-5, std::size_t max_entries_per_param = 0);

}  // namespace topoaug
