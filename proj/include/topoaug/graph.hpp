#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "topoaug/sparse.hpp"
#include "topoaug/types.hpp"

namespace topoaug {

// Undirected simple graph. Edges are stored canonically (u < v, sorted,
// unique); self-loops and duplicates are rejected at ingestion rather than
// silently fixed. Features and labels are optional payloads; edge features
// are carried through ingestion but no construction strategy consumes them.
struct Graph {
  std::size_t num_nodes = 0;
  std::vector<std::pair<NodeId, NodeId>> edges;
  std::optional<DenseMatrix> node_features;
  std::optional<DenseMatrix> edge_features;
  std::optional<std::vector<int>> labels;       // class indices
  std::optional<std::vector<double>> targets;   // regression targets

  // Orients each pair as (min, max), sorts, and throws ValidationError on
  // self-loops, duplicates, or out-of-range endpoints.
  static Graph make(std::size_t num_nodes,
                    std::vector<std::pair<NodeId, NodeId>> edges);

  // Re-checks every invariant, including payload shapes.
  void validate() const;
};

// Collection of node subsets, each a candidate rank-2 cell. Members are
// sorted ascending; the hyperedge list is sorted lexicographically with
// exact duplicates removed. Every hyperedge has cardinality >= min_size.
struct HyperedgeSet {
  std::vector<std::vector<NodeId>> hyperedges;
  std::size_t min_size = 3;

  // Canonicalizes raw subsets: sorts members (duplicate members are a
  // ValidationError), drops identical sets, filters by min_size, sorts the
  // list. Member indices must be < num_nodes.
  static HyperedgeSet make(std::vector<std::vector<NodeId>> raw,
                           std::size_t min_size, std::size_t num_nodes);

  void validate(std::size_t num_nodes) const;
};

SparseMatrix build_adjacency(const Graph& g);

// D^{-1/2} (A+I) D^{-1/2} with D the degree of A+I.
SparseMatrix normalize_adjacency_sym(const SparseMatrix& a);

// |V| x (#hyperedges) binary membership matrix, columns in canonical order.
SparseMatrix incidence_matrix(const HyperedgeSet& h, std::size_t num_nodes);

std::vector<std::size_t> node_degrees(const Graph& g);
std::vector<std::size_t> hyperedge_degrees(const HyperedgeSet& h);

}  // namespace topoaug
