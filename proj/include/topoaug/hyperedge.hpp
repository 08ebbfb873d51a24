#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "topoaug/complex.hpp"
#include "topoaug/graph.hpp"
#include "topoaug/kernels.hpp"

namespace topoaug {

using kernels::Metric;

struct CliqueConfig {
  std::size_t min_size = 3;
};

// Grouping of nodes by 1-D coordinate (base pairs), optionally partitioned
// (one partition per chromosome). Within a partition, nodes sorted by
// position are scanned greedily: a group spans at most `window` from its
// first (anchor) element. The anchor rule is a deliberate, swappable policy.
struct WindowConfig {
  std::vector<std::int64_t> positions;                 // one per node
  std::optional<std::vector<std::string>> partitions;  // one per node
  std::int64_t window = 200000;
  std::size_t min_size = 3;
};

// Grouping by embedding proximity: connected components of the graph whose
// edges are pairs at distance <= tau (single linkage). tau has no default;
// it must come from the caller.
struct ThresholdConfig {
  DenseMatrix embeddings;
  double tau = 0.0;
  Metric metric = Metric::euclidean;
  std::size_t min_size = 3;
};

// All maximal cliques (no size filter), canonically ordered. Bron-Kerbosch
// with pivoting; the pivot maximizes |P intersect N(u)| over P union X,
// ties broken by smallest node index so the recursion is deterministic.
HyperedgeSet maximal_cliques(const Graph& g);

HyperedgeSet filter_by_size(const HyperedgeSet& h, std::size_t min_size);

HyperedgeSet window_hyperedges(const Graph& g, const WindowConfig& cfg);

HyperedgeSet threshold_hyperedges(const ThresholdConfig& cfg);

struct ComplexOptions {
  // Size-1 hyperedges are rejected by default; when admitted they merge
  // into the existing rank-0 singleton cells.
  bool admit_singleton_hyperedges = false;
};

// Assembles the full complex: singletons at rank 0, simple edges at rank 1,
// hyperedges at rank 2. A hyperedge identical to an existing edge pair is
// kept once, at rank 1, so the rank function stays well-defined.
CombinatorialComplex build_combinatorial_complex(const Graph& g,
                                                 const HyperedgeSet& h,
                                                 ComplexOptions opts = {});

}  // namespace topoaug
