#include "topoaug/complex.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace topoaug {

namespace {

std::string members_str(const std::vector<NodeId>& m) {
  std::string s = "{";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(m[i]);
  }
  return s + "}";
}

bool is_subset(const std::vector<NodeId>& a, const std::vector<NodeId>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

std::vector<std::vector<NodeId>> CombinatorialComplex::cells_with_rank(
    int rank) const {
  std::vector<std::vector<NodeId>> out;
  for (const auto& c : cells)
    if (c.rank == rank) out.push_back(c.members);
  return out;
}

ValidationReport validate_complex(const CombinatorialComplex& cc) {
  ValidationReport report;

  std::set<std::vector<NodeId>> singletons_present;
  std::map<std::vector<NodeId>, std::size_t> seen;
  for (const auto& cell : cc.cells) {
    if (cell.rank == 0 && cell.members.size() == 1)
      singletons_present.insert(cell.members);
    if (++seen[cell.members] == 2)
      report.violations.push_back("duplicate cell " + members_str(cell.members));
  }
  for (NodeId v = 0; v < cc.num_nodes; ++v) {
    if (!singletons_present.count({v}))
      report.violations.push_back("missing singleton {" + std::to_string(v) + "}");
  }
  // Pairwise subset scan; fine at the instance sizes the validators see.
  for (std::size_t i = 0; i < cc.cells.size(); ++i) {
    for (std::size_t j = 0; j < cc.cells.size(); ++j) {
      if (i == j) continue;
      const Cell& x = cc.cells[i];
      const Cell& y = cc.cells[j];
      if (x.members.size() <= y.members.size() &&
          is_subset(x.members, y.members) && x.rank > y.rank) {
        report.violations.push_back(
            "rank order violated: " + members_str(x.members) + " rank " +
            std::to_string(x.rank) + " inside " + members_str(y.members) +
            " rank " + std::to_string(y.rank));
      }
    }
  }
  return report;
}

SparseMatrix incidence_matrix(const CombinatorialComplex& cc,
                              std::optional<int> only_rank) {
  std::vector<std::tuple<std::uint32_t, std::uint32_t, double>> trip;
  std::uint32_t col = 0;
  for (const auto& cell : cc.cells) {
    if (only_rank && cell.rank != *only_rank) continue;
    for (NodeId v : cell.members) {
      if (v >= cc.num_nodes)
        throw ValidationError("cell " + members_str(cell.members) +
                              " member out of range");
      trip.emplace_back(v, col, 1.0);
    }
    ++col;
  }
  return SparseMatrix::from_triplets(cc.num_nodes, col, std::move(trip));
}

}  // namespace topoaug
