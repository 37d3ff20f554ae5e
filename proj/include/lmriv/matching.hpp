#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "lmriv/graph.hpp"
#include "lmriv/polynomial.hpp"

namespace lmriv {

/// Number of i-matchings, i = 0..floor(n/2).
struct MatchingProfile {
  std::vector<Integer> counts;
  std::string source;  // graph6 of the graph it was computed from
};

/// M(G, x) by vertex expansion at a maximum-degree vertex, with the
/// recursion memoized on vertex subsets of `g` and split into components.
/// Requires order <= 128.
IntPoly matching_polynomial(const Graph& g);

/// x M(G - v) - sum_{u in N(v)} M(G - v - u): one expansion step at a
/// caller-chosen vertex, the rest computed as above.
IntPoly matching_polynomial_at(const Graph& g, Vertex v);

/// Visits every matching of g (including the empty one) by backtracking
/// over the edge list.
void for_each_matching(const Graph& g,
                       const std::function<void(std::span<const Edge> matching)>& visit);

/// Brute-force counts, independent of the expansion recursion.
MatchingProfile matching_counts_oracle(const Graph& g);

/// sum_i (-1)^i phi_i x^(n - 2i).
IntPoly matching_polynomial_from_counts(int order, const MatchingProfile& profile);

/// Every real root r of M(G, x) satisfies r^2 < 4(max_degree - 1). Decided
/// exactly: with M(x) = x^(n mod 2) P(x^2), P must have no root in
/// [4(max_degree - 1), inf). Requires max_degree >= 2.
bool within_heilmann_lieb_bound(const Graph& g);

}  // namespace lmriv
