#include "topoaug/graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace topoaug {

namespace {

std::string edge_str(NodeId u, NodeId v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

Graph Graph::make(std::size_t num_nodes,
                  std::vector<std::pair<NodeId, NodeId>> edges) {
  for (auto& [u, v] : edges) {
    if (u == v) throw ValidationError("self-loop at node " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (v >= num_nodes)
      throw ValidationError("edge " + edge_str(u, v) + " endpoint >= num_nodes (" +
                            std::to_string(num_nodes) + ")");
  }
  std::sort(edges.begin(), edges.end());
  const auto dup = std::adjacent_find(edges.begin(), edges.end());
  if (dup != edges.end())
    throw ValidationError("duplicate edge " + edge_str(dup->first, dup->second));
  Graph g;
  g.num_nodes = num_nodes;
  g.edges = std::move(edges);
  return g;
}

void Graph::validate() const {
  std::vector<std::pair<NodeId, NodeId>> copy = edges;
  Graph canon = Graph::make(num_nodes, std::move(copy));
  if (canon.edges != edges)
    throw ValidationError("edges not in canonical order");
  if (node_features && node_features->rows != num_nodes)
    throw ValidationError("node_features rows (" +
                          std::to_string(node_features->rows) +
                          ") != num_nodes (" + std::to_string(num_nodes) + ")");
  if (edge_features && edge_features->rows != edges.size())
    throw ValidationError("edge_features rows != num_edges");
  if (labels && labels->size() != num_nodes)
    throw ValidationError("labels length != num_nodes");
  if (targets && targets->size() != num_nodes)
    throw ValidationError("targets length != num_nodes");
}

HyperedgeSet HyperedgeSet::make(std::vector<std::vector<NodeId>> raw,
                                std::size_t min_size, std::size_t num_nodes) {
  for (auto& he : raw) {
    std::sort(he.begin(), he.end());
    if (std::adjacent_find(he.begin(), he.end()) != he.end())
      throw ValidationError("hyperedge has duplicate member");
    if (!he.empty() && he.back() >= num_nodes)
      throw ValidationError("hyperedge member " + std::to_string(he.back()) +
                            " >= num_nodes (" + std::to_string(num_nodes) + ")");
  }
  std::erase_if(raw, [&](const auto& he) { return he.size() < min_size; });
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  HyperedgeSet h;
  h.hyperedges = std::move(raw);
  h.min_size = min_size;
  return h;
}

void HyperedgeSet::validate(std::size_t num_nodes) const {
  for (const auto& he : hyperedges) {
    if (he.size() < min_size)
      throw ValidationError("hyperedge smaller than min_size");
    if (!std::is_sorted(he.begin(), he.end()) ||
        std::adjacent_find(he.begin(), he.end()) != he.end())
      throw ValidationError("hyperedge members not sorted unique");
    if (!he.empty() && he.back() >= num_nodes)
      throw ValidationError("hyperedge member out of range");
  }
  if (!std::is_sorted(hyperedges.begin(), hyperedges.end()))
    throw ValidationError("hyperedges not in canonical order");
  if (std::adjacent_find(hyperedges.begin(), hyperedges.end()) !=
      hyperedges.end())
    throw ValidationError("duplicate hyperedges");
}

SparseMatrix build_adjacency(const Graph& g) {
  std::vector<std::tuple<std::uint32_t, std::uint32_t, double>> trip;
  trip.reserve(2 * g.edges.size());
  for (const auto& [u, v] : g.edges) {
    trip.emplace_back(u, v, 1.0);
    trip.emplace_back(v, u, 1.0);
  }
  return SparseMatrix::from_triplets(g.num_nodes, g.num_nodes, std::move(trip));
}

SparseMatrix normalize_adjacency_sym(const SparseMatrix& a) {
  if (a.rows() != a.cols())
    throw ValidationError("normalize_adjacency_sym needs a square matrix");
  const std::size_t n = a.rows();
  // Degrees of A+I; the self-loop guarantees every degree >= 1.
  std::vector<double> inv_sqrt_deg(n);
  for (std::size_t r = 0; r < n; ++r)
    inv_sqrt_deg[r] = 1.0 / std::sqrt(static_cast<double>(a.row_cols(r).size() + 1));
  std::vector<std::tuple<std::uint32_t, std::uint32_t, double>> trip;
  trip.reserve(a.nnz() + n);
  for (std::size_t r = 0; r < n; ++r) {
    const auto cols = a.row_cols(r);
    const auto vals = a.row_vals(r);
    bool diag_emitted = false;
    for (std::size_t k = 0; k < cols.size(); ++k) {
      if (!diag_emitted && cols[k] >= r) {
        if (cols[k] == r)
          throw ValidationError("normalize_adjacency_sym input has a diagonal entry");
        trip.emplace_back(static_cast<std::uint32_t>(r),
                          static_cast<std::uint32_t>(r),
                          inv_sqrt_deg[r] * inv_sqrt_deg[r]);
        diag_emitted = true;
      }
      trip.emplace_back(static_cast<std::uint32_t>(r), cols[k],
                        vals[k] * inv_sqrt_deg[r] * inv_sqrt_deg[cols[k]]);
    }
    if (!diag_emitted)
      trip.emplace_back(static_cast<std::uint32_t>(r),
                        static_cast<std::uint32_t>(r),
                        inv_sqrt_deg[r] * inv_sqrt_deg[r]);
  }
  return SparseMatrix::from_triplets(n, n, std::move(trip));
}

SparseMatrix incidence_matrix(const HyperedgeSet& h, std::size_t num_nodes) {
  std::vector<std::tuple<std::uint32_t, std::uint32_t, double>> trip;
  for (std::size_t j = 0; j < h.hyperedges.size(); ++j) {
    for (NodeId v : h.hyperedges[j]) {
      if (v >= num_nodes)
        throw ValidationError("hyperedge " + std::to_string(j) + " member " +
                              std::to_string(v) + " out of range");
      trip.emplace_back(v, static_cast<std::uint32_t>(j), 1.0);
    }
  }
  return SparseMatrix::from_triplets(num_nodes, h.hyperedges.size(),
                                     std::move(trip));
}

std::vector<std::size_t> node_degrees(const Graph& g) {
  std::vector<std::size_t> deg(g.num_nodes, 0);
  for (const auto& [u, v] : g.edges) {
    deg[u]++;
    deg[v]++;
  }
  return deg;
}

std::vector<std::size_t> hyperedge_degrees(const HyperedgeSet& h) {
  std::vector<std::size_t> deg(h.hyperedges.size());
  for (std::size_t j = 0; j < h.hyperedges.size(); ++j)
    deg[j] = h.hyperedges[j].size();
  return deg;
}

}  // namespace topoaug
