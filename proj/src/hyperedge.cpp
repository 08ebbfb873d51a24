#include "topoaug/hyperedge.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace topoaug {

namespace {

class BronKerbosch {
 public:
  explicit BronKerbosch(const Graph& g) : n_(g.num_nodes), adj_(g.num_nodes) {
    for (const auto& [u, v] : g.edges) {
      adj_[u].insert(v);
      adj_[v].insert(u);
    }
  }

  std::vector<std::vector<NodeId>> run() {
    std::vector<NodeId> r, p(n_), x;
    std::iota(p.begin(), p.end(), NodeId{0});
    expand(r, p, x);
    return std::move(cliques_);
  }

 private:
  // P and X are kept sorted ascending throughout.
  void expand(std::vector<NodeId>& r, std::vector<NodeId> p,
              std::vector<NodeId> x) {
    if (p.empty() && x.empty()) {
      cliques_.push_back(r);
      return;
    }
    const NodeId pivot = choose_pivot(p, x);
    std::vector<NodeId> candidates;
    for (NodeId v : p)
      if (!adj_[pivot].count(v)) candidates.push_back(v);
    for (NodeId v : candidates) {
      std::vector<NodeId> p_next, x_next;
      for (NodeId u : p)
        if (adj_[v].count(u)) p_next.push_back(u);
      for (NodeId u : x)
        if (adj_[v].count(u)) x_next.push_back(u);
      r.push_back(v);
      expand(r, std::move(p_next), std::move(x_next));
      r.pop_back();
      p.erase(std::find(p.begin(), p.end(), v));
      x.insert(std::lower_bound(x.begin(), x.end(), v), v);
    }
  }

  NodeId choose_pivot(const std::vector<NodeId>& p,
                      const std::vector<NodeId>& x) const {
    NodeId best = p.empty() ? x.front() : p.front();
    std::size_t best_count = 0;
    bool first = true;
    for (const auto* side : {&p, &x}) {
      for (NodeId u : *side) {
        std::size_t count = 0;
        for (NodeId v : p) count += adj_[u].count(v);
        if (first || count > best_count || (count == best_count && u < best)) {
          best = u;
          best_count = count;
          first = false;
        }
      }
    }
    return best;
  }

  std::size_t n_;
  std::vector<std::set<NodeId>> adj_;
  std::vector<std::vector<NodeId>> cliques_;
};

}  // namespace

HyperedgeSet maximal_cliques(const Graph& g) {
  BronKerbosch bk(g);
  return HyperedgeSet::make(bk.run(), 1, g.num_nodes);
}

HyperedgeSet filter_by_size(const HyperedgeSet& h, std::size_t min_size) {
  std::vector<std::vector<NodeId>> kept;
  for (const auto& he : h.hyperedges)
    if (he.size() >= min_size) kept.push_back(he);
  HyperedgeSet out;
  out.hyperedges = std::move(kept);
  out.min_size = min_size;
  return out;
}

HyperedgeSet window_hyperedges(const Graph& g, const WindowConfig& cfg) {
  if (cfg.window <= 0) throw ValidationError("window must be positive");
  if (cfg.positions.size() != g.num_nodes)
    throw ValidationError("positions length (" +
                          std::to_string(cfg.positions.size()) +
                          ") != num_nodes (" + std::to_string(g.num_nodes) + ")");
  if (cfg.partitions && cfg.partitions->size() != g.num_nodes)
    throw ValidationError("partitions length != num_nodes");

  std::map<std::string, std::vector<NodeId>> parts;
  for (NodeId v = 0; v < g.num_nodes; ++v)
    parts[cfg.partitions ? (*cfg.partitions)[v] : std::string{}].push_back(v);

  std::vector<std::vector<NodeId>> groups;
  for (auto& [key, nodes] : parts) {
    std::sort(nodes.begin(), nodes.end(), [&](NodeId a, NodeId b) {
      if (cfg.positions[a] != cfg.positions[b])
        return cfg.positions[a] < cfg.positions[b];
      return a < b;
    });
    std::vector<NodeId> group;
    std::int64_t anchor = 0;
    for (NodeId v : nodes) {
      if (group.empty() || cfg.positions[v] > anchor + cfg.window) {
        if (!group.empty()) groups.push_back(std::move(group));
        group = {v};
        anchor = cfg.positions[v];
      } else {
        group.push_back(v);
      }
    }
    if (!group.empty()) groups.push_back(std::move(group));
  }
  return HyperedgeSet::make(std::move(groups), cfg.min_size, g.num_nodes);
}

namespace {

// Union-find with path halving.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t a) {
    while (parent_[a] != a) {
      parent_[a] = parent_[parent_[a]];
      a = parent_[a];
    }
    return a;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

HyperedgeSet threshold_hyperedges(const ThresholdConfig& cfg) {
  if (cfg.tau <= 0.0) throw ValidationError("tau must be positive");
  const std::size_t n = cfg.embeddings.rows;
  const auto pairs = kernels::pairs_within_tau(cfg.embeddings, cfg.tau, cfg.metric);
  DisjointSets ds(n);
  for (const auto& [i, j] : pairs) ds.unite(i, j);
  std::map<std::size_t, std::vector<NodeId>> components;
  for (std::size_t v = 0; v < n; ++v)
    components[ds.find(v)].push_back(static_cast<NodeId>(v));
  std::vector<std::vector<NodeId>> groups;
  for (auto& [root, members] : components) groups.push_back(std::move(members));
  return HyperedgeSet::make(std::move(groups), cfg.min_size, n);
}

CombinatorialComplex build_combinatorial_complex(const Graph& g,
                                                 const HyperedgeSet& h,
                                                 ComplexOptions opts) {
  h.validate(g.num_nodes);
  CombinatorialComplex cc;
  cc.num_nodes = g.num_nodes;
  for (NodeId v = 0; v < g.num_nodes; ++v)
    cc.cells.push_back({{v}, 0, CellProvenance::singleton});
  std::set<std::vector<NodeId>> edge_cells;
  for (const auto& [u, v] : g.edges) {
    cc.cells.push_back({{u, v}, 1, CellProvenance::simple_edge});
    edge_cells.insert({u, v});
  }
  for (const auto& he : h.hyperedges) {
    if (he.size() < 2) {
      if (!opts.admit_singleton_hyperedges)
        throw ValidationError("hyperedge of size " + std::to_string(he.size()) +
                              " not admitted (enable admit_singleton_hyperedges)");
      continue;  // merges into the rank-0 singleton cell
    }
    if (he.size() == 2 && edge_cells.count(he)) continue;  // kept at rank 1
    cc.cells.push_back({he, 2, CellProvenance::virtual_hyperedge});
  }
  std::sort(cc.cells.begin(), cc.cells.end(), [](const Cell& a, const Cell& b) {
    if (a.rank != b.rank) return a.rank < b.rank;
    return a.members < b.members;
  });
  return cc;
}

}  // namespace topoaug
