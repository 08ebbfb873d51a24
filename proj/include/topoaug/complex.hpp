#pragma once

#include <optional>
#include <string>
#include <vector>

#include "topoaug/graph.hpp"

namespace topoaug {

enum class CellProvenance { singleton, simple_edge, virtual_hyperedge };

struct Cell {
  std::vector<NodeId> members;  // sorted ascending
  int rank = 0;                 // 0 singleton, 1 simple edge, 2 hyperedge
  CellProvenance provenance = CellProvenance::singleton;
};

// Cells with an order-preserving rank: x subseteq y implies rk(x) <= rk(y).
// Canonical cell order is rank ascending, then members lexicographic, so
// every downstream matrix is deterministic.
struct CombinatorialComplex {
  std::size_t num_nodes = 0;
  std::vector<Cell> cells;

  std::vector<std::vector<NodeId>> cells_with_rank(int rank) const;
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Violations are data, not failures: reports every missing singleton,
// rank-order violation pair, and duplicate cell set.
ValidationReport validate_complex(const CombinatorialComplex& cc);

// |V| x (#cells) membership matrix; only_rank restricts the columns to the
// cells of that rank (canonical order preserved).
SparseMatrix incidence_matrix(const CombinatorialComplex& cc,
                              std::optional<int> only_rank = std::nullopt);

}  // namespace topoaug
