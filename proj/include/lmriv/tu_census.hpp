#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "lmriv/errors.hpp"
#include "lmriv/graph.hpp"
#include "lmriv/polynomial.hpp"

namespace lmriv {

/// Bit k set <=> g.edges()[k] is in the subset.
using EdgeMask = std::uint64_t;

/// Budget for exhaustive edge-subset enumeration.
struct CensusLimits {
  int max_edges = 24;
};

/// Spanning subgraph whose components are all trees or unicyclic; isolated
/// vertices are trees of order 1.
struct TUSubgraph {
  EdgeMask edges = 0;
  int unicyclic_components = 0;
  std::vector<int> tree_orders;
  Integer weight;  // 2^s * prod |T_i|
};

std::optional<TUSubgraph> classify_tu(const Graph& g, EdgeMask edges);

void for_each_tu_subgraph(const Graph& g, int edge_count,
                          const std::function<void(const TUSubgraph&)>& visit,
                          const CensusLimits& limits = {});

/// b_i = sum of weights of the i-edge spanning TU-subgraphs, 1 <= i <= n.
Integer coefficient_b(const Graph& g, int i, const CensusLimits& limits = {});
/// b_0..b_n in one pass over the edge subsets.
std::vector<Integer> tu_coefficients(const Graph& g, const CensusLimits& limits = {});

/// Matrix-Tree count via fraction-free elimination; 0 when disconnected.
Integer spanning_tree_count(const Graph& g);
/// Connected spanning subgraphs with exactly n edges.
Integer unicyclic_spanning_count(const Graph& g, const CensusLimits& limits = {});
/// Cycle length of every unicyclic spanning subgraph, in enumeration order.
std::vector<int> unicyclic_cycle_lengths(const Graph& g, const CensusLimits& limits = {});

struct RatioCheck {
  Integer spanning_trees;
  Integer unicyclic_spanning;
  int girth = 0;
  int cycle_dim = 0;
  bool holds = false;  // |T| * c >= |H1| * g
};

/// Counting bound |T(G)| / |H1(G)| >= g(G) / c(G) for connected G with a
/// cycle; throws DomainError otherwise.
RatioCheck ratio_check(const Graph& g, const CensusLimits& limits = {});

enum class PartitionType { I, II };

/// Vertex partition whose blocks each induce a connected subgraph with a
/// cycle. Blocks are sorted and ordered by their smallest vertex.
struct AdmissiblePartition {
  std::vector<std::vector<Vertex>> blocks;

  int block_count() const { return static_cast<int>(blocks.size()); }
  int block_of(Vertex v) const;
  /// I when both endpoints share a block.
  PartitionType type_for(const Edge& e) const;
};

void for_each_admissible_partition(const Graph& g,
                                   const std::function<void(const AdmissiblePartition&)>& visit);
std::vector<AdmissiblePartition> admissible_partitions(const Graph& g);

struct PartitionRatio {
  PartitionType type = PartitionType::I;
  Rational ratio;
  bool exceeds_one = false;
};

/// Type I: |T(G1)| / |H1(G1)| for the block holding both endpoints.
/// Type II: |T(G1)| / (2|H1(G1)|) + |T(G2)| / (2|H1(G2)|) for the two
/// blocks holding the endpoints. G_k is the subgraph induced by a block.
PartitionRatio partition_ratio_check(const Graph& g, const Edge& e,
                                     const AdmissiblePartition& partition,
                                     const CensusLimits& limits = {});

/// Total weight of the n-edge spanning TU-subgraphs containing every edge of
/// `require` and none of `forbid`.
Integer filtered_weight(const Graph& g, std::span<const Edge> require,
                        std::span<const Edge> forbid, const CensusLimits& limits = {});

}  // namespace lmriv
