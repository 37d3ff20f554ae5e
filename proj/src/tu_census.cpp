#include "lmriv/tu_census.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace lmriv {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n), vertices_(n, 1), edges_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  /// Adds an edge; returns the root of the merged component.
  int unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      if (vertices_[a] < vertices_[b]) std::swap(a, b);
      parent_[b] = a;
      vertices_[a] += vertices_[b];
      edges_[a] += edges_[b];
    }
    ++edges_[a];
    return a;
  }

  int vertices(int root) const { return vertices_[root]; }
  int edges(int root) const { return edges_[root]; }

 private:
  std::vector<int> parent_;
  std::vector<int> vertices_;
  std::vector<int> edges_;
};

void check_budget(const Graph& g, const CensusLimits& limits) {
  if (g.size() > limits.max_edges || g.size() > 63) {
    throw SizeCapError("graph has " + std::to_string(g.size()) +
                       " edges; exhaustive census is capped at " +
                       std::to_string(std::min(limits.max_edges, 63)));
  }
}

/// Visits every subset of `m` edges with exactly `k` members (Gosper).
template <class Fn>
void for_each_k_subset(int m, int k, Fn&& fn) {
  if (k < 0 || k > m) return;
  if (k == 0) {
    fn(EdgeMask{0});
    return;
  }
  const EdgeMask limit = EdgeMask{1} << m;
  EdgeMask mask = (EdgeMask{1} << k) - 1;
  while (mask < limit) {
    fn(mask);
    const EdgeMask low = mask & (~mask + 1);
    const EdgeMask ripple = mask + low;
    mask = (((ripple ^ mask) >> 2) / low) | ripple;
  }
}

bool connected_spanning(const Graph& g, EdgeMask mask) {
  if (g.order() == 0) return false;
  DisjointSets sets(g.order());
  int merges = 0;
  for (EdgeMask rest = mask; rest != 0; rest &= rest - 1) {
    const Edge& e = g.edges()[std::countr_zero(rest)];
    if (sets.find(e.u) != sets.find(e.v)) ++merges;
    sets.unite(e.u, e.v);
  }
  return merges == g.order() - 1;
}

int cycle_length(const Graph& g, EdgeMask mask) {
  std::vector<int> degree(g.order(), 0);
  std::vector<std::vector<Vertex>> adj(g.order());
  int edges = 0;
  for (EdgeMask rest = mask; rest != 0; rest &= rest - 1) {
    const Edge& e = g.edges()[std::countr_zero(rest)];
    ++degree[e.u];
    ++degree[e.v];
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
    ++edges;
  }
  std::vector<Vertex> leaves;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (degree[v] == 1) leaves.push_back(v);
  }
  while (!leaves.empty()) {
    const Vertex v = leaves.back();
    leaves.pop_back();
    if (degree[v] != 1) continue;
    degree[v] = 0;
    --edges;
    for (Vertex w : adj[v]) {
      if (degree[w] > 0 && --degree[w] == 1) leaves.push_back(w);
    }
  }
  return edges;
}

EdgeMask mask_of(const Graph& g, std::span<const Edge> edges) {
  EdgeMask mask = 0;
  for (const Edge& e : edges) {
    const auto idx = g.edge_index(e.u, e.v);
    if (!idx) {
      throw DomainError("{" + std::to_string(e.u) + "," + std::to_string(e.v) +
                        "} is not an edge of the graph");
    }
    mask |= EdgeMask{1} << *idx;
  }
  return mask;
}

}  // namespace

std::optional<TUSubgraph> classify_tu(const Graph& g, EdgeMask edges) {
  DisjointSets sets(g.order());
  for (EdgeMask rest = edges; rest != 0; rest &= rest - 1) {
    const Edge& e = g.edges()[std::countr_zero(rest)];
    const int root = sets.unite(e.u, e.v);
    if (sets.edges(root) > sets.vertices(root)) return std::nullopt;
  }
  TUSubgraph h;
  h.edges = edges;
  h.weight = 1;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (sets.find(v) != v) continue;
    if (sets.edges(v) == sets.vertices(v)) {
      ++h.unicyclic_components;
      h.weight *= 2;
    } else {
      h.tree_orders.push_back(sets.vertices(v));
      h.weight *= sets.vertices(v);
    }
  }
  return h;
}

void for_each_tu_subgraph(const Graph& g, int edge_count,
                          const std::function<void(const TUSubgraph&)>& visit,
                          const CensusLimits& limits) {
  check_budget(g, limits);
  for_each_k_subset(g.size(), edge_count, [&](EdgeMask mask) {
    if (auto h = classify_tu(g, mask)) visit(*h);
  });
}

Integer coefficient_b(const Graph& g, int i, const CensusLimits& limits) {
  if (i < 0 || i > g.order()) {
    throw DomainError("coefficient index " + std::to_string(i) + " outside 0.." +
                      std::to_string(g.order()));
  }
  Integer total = 0;
  for_each_tu_subgraph(g, i, [&](const TUSubgraph& h) { total += h.weight; }, limits);
  return total;
}

std::vector<Integer> tu_coefficients(const Graph& g, const CensusLimits& limits) {
  check_budget(g, limits);
  std::vector<Integer> b(static_cast<std::size_t>(g.order()) + 1, 0);
  for (int i = 0; i <= std::min(g.order(), g.size()); ++i) {
    for_each_k_subset(g.size(), i, [&](EdgeMask mask) {
      if (auto h = classify_tu(g, mask)) b[i] += h->weight;
    });
  }
  return b;
}

Integer spanning_tree_count(const Graph& g) {
  const int n = g.order();
  if (n == 0) return 0;
  if (n == 1) return 1;
  // Laplacian with row/column 0 removed.
  const int k = n - 1;
  std::vector<std::vector<Integer>> a(k, std::vector<Integer>(k, 0));
  for (int i = 0; i < k; ++i) {
    a[i][i] = g.degree(i + 1);
    for (Vertex w : g.neighbors(i + 1)) {
      if (w > 0) a[i][w - 1] = -1;
    }
  }
  // Bareiss: every intermediate is an exact minor.
  Integer previous = 1;
  int sign = 1;
  for (int p = 0; p < k; ++p) {
    if (a[p][p] == 0) {
      int swap_row = -1;
      for (int r = p + 1; r < k; ++r) {
        if (a[r][p] != 0) {
          swap_row = r;
          break;
        }
      }
      if (swap_row < 0) return 0;
      std::swap(a[p], a[swap_row]);
      sign = -sign;
    }
    for (int r = p + 1; r < k; ++r) {
      for (int c = p + 1; c < k; ++c) {
        Integer v = a[r][c] * a[p][p] - a[r][p] * a[p][c];
        mpz_divexact(a[r][c].get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
      }
      a[r][p] = 0;
    }
    previous = a[p][p];
  }
  return sign * a[k - 1][k - 1];
}

Integer unicyclic_spanning_count(const Graph& g, const CensusLimits& limits) {
  check_budget(g, limits);
  Integer count = 0;
  for_each_k_subset(g.size(), g.order(), [&](EdgeMask mask) {
    if (connected_spanning(g, mask)) ++count;
  });
  return count;
}

std::vector<int> unicyclic_cycle_lengths(const Graph& g, const CensusLimits& limits) {
  check_budget(g, limits);
  std::vector<int> lengths;
  for_each_k_subset(g.size(), g.order(), [&](EdgeMask mask) {
    if (connected_spanning(g, mask)) lengths.push_back(cycle_length(g, mask));
  });
  return lengths;
}

RatioCheck ratio_check(const Graph& g, const CensusLimits& limits) {
  const StructuralMetrics metrics = structural_metrics(g);
  if (!metrics.is_connected) throw DomainError("ratio check needs a connected graph");
  if (metrics.cycle_dim < 1) throw DomainError("ratio check needs a cycle (c >= 1); got a tree");
  RatioCheck out;
  out.spanning_trees = spanning_tree_count(g);
  out.unicyclic_spanning = unicyclic_spanning_count(g, limits);
  out.girth = *metrics.girth;
  out.cycle_dim = metrics.cycle_dim;
  out.holds = out.spanning_trees * out.cycle_dim >= out.unicyclic_spanning * out.girth;
  return out;
}

int AdmissiblePartition::block_of(Vertex v) const {
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (std::binary_search(blocks[b].begin(), blocks[b].end(), v)) return static_cast<int>(b);
  }
  return -1;
}

PartitionType AdmissiblePartition::type_for(const Edge& e) const {
  return block_of(e.u) == block_of(e.v) ? PartitionType::I : PartitionType::II;
}

void for_each_admissible_partition(const Graph& g,
                                   const std::function<void(const AdmissiblePartition&)>& visit) {
  const int n = g.order();
  if (n == 0 || n > 63) return;
  std::vector<std::uint64_t> adj(n, 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= std::uint64_t{1} << e.v;
    adj[e.v] |= std::uint64_t{1} << e.u;
  }

  // A block qualifies when it induces a connected graph with at least as
  // many edges as vertices.
  const auto qualifies = [&](std::uint64_t block) {
    const int size = std::popcount(block);
    if (size < 3) return false;
    int twice_edges = 0;
    for (std::uint64_t rest = block; rest != 0; rest &= rest - 1) {
      twice_edges += std::popcount(adj[std::countr_zero(rest)] & block);
    }
    if (twice_edges / 2 < size) return false;
    std::uint64_t seen = block & (~block + 1);
    std::uint64_t frontier = seen;
    while (frontier != 0) {
      std::uint64_t next = 0;
      for (std::uint64_t rest = frontier; rest != 0; rest &= rest - 1) {
        next |= adj[std::countr_zero(rest)];
      }
      next &= block & ~seen;
      seen |= next;
      frontier = next;
    }
    return seen == block;
  };

  // Blocks are chosen in order of their smallest vertex, which matches the
  // restricted-growth-string canonical form; blocks that cannot be admissible
  // are pruned before recursing.
  AdmissiblePartition current;
  std::function<void(std::uint64_t)> place = [&](std::uint64_t remaining) {
    if (remaining == 0) {
      visit(current);
      return;
    }
    const std::uint64_t lowest = remaining & (~remaining + 1);
    const std::uint64_t others = remaining & ~lowest;
    // Enumerate subsets of `others` in increasing numeric order.
    std::uint64_t sub = 0;
    while (true) {
      const std::uint64_t block = sub | lowest;
      if (qualifies(block)) {
        std::vector<Vertex> members;
        for (std::uint64_t rest = block; rest != 0; rest &= rest - 1) {
          members.push_back(std::countr_zero(rest));
        }
        current.blocks.push_back(std::move(members));
        place(remaining & ~block);
        current.blocks.pop_back();
      }
      if (sub == others) break;
      sub = (sub - others) & others;
    }
  };
  std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  place(all);
}

std::vector<AdmissiblePartition> admissible_partitions(const Graph& g) {
  std::vector<AdmissiblePartition> out;
  for_each_admissible_partition(g, [&](const AdmissiblePartition& p) { out.push_back(p); });
  return out;
}

PartitionRatio partition_ratio_check(const Graph& g, const Edge& e,
                                     const AdmissiblePartition& partition,
                                     const CensusLimits& limits) {
  if (e.u < 0 || e.v >= g.order() || e.u == e.v) throw DomainError("candidate edge out of range");
  if (g.adjacent(e.u, e.v)) throw DomainError("candidate edge is already an edge");
  std::vector<int> owner(g.order(), -1);
  for (std::size_t b = 0; b < partition.blocks.size(); ++b) {
    for (Vertex v : partition.blocks[b]) {
      if (v < 0 || v >= g.order() || owner[v] >= 0) {
        throw DomainError("partition blocks do not partition the vertex set");
      }
      owner[v] = static_cast<int>(b);
    }
  }
  if (std::find(owner.begin(), owner.end(), -1) != owner.end()) {
    throw DomainError("partition blocks do not cover the vertex set");
  }

  const auto block_ratio = [&](int b) {
    const Graph block = induced_subgraph(g, partition.blocks[b]);
    const Integer trees = spanning_tree_count(block);
    const Integer unicyclic = unicyclic_spanning_count(block, limits);
    if (unicyclic == 0) throw DomainError("partition block has no unicyclic spanning subgraph");
    Rational r(trees, unicyclic);
    r.canonicalize();
    return r;
  };

  PartitionRatio out;
  if (owner[e.u] == owner[e.v]) {
    out.type = PartitionType::I;
    out.ratio = block_ratio(owner[e.u]);
  } else {
    out.type = PartitionType::II;
    out.ratio = block_ratio(owner[e.u]) / 2 + block_ratio(owner[e.v]) / 2;
  }
  out.exceeds_one = out.ratio > 1;
  return out;
}

Integer filtered_weight(const Graph& g, std::span<const Edge> require,
                        std::span<const Edge> forbid, const CensusLimits& limits) {
  check_budget(g, limits);
  const EdgeMask required = mask_of(g, require);
  const EdgeMask forbidden = mask_of(g, forbid);
  if ((required & forbidden) != 0) throw DomainError("require and forbid sets overlap");
  Integer total = 0;
  for_each_k_subset(g.size(), g.order(), [&](EdgeMask mask) {
    if ((mask & required) != required || (mask & forbidden) != 0) return;
    if (auto h = classify_tu(g, mask)) total += h->weight;
  });
  return total;
}

}  // namespace lmriv
