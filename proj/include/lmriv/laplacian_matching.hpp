#pragma once

#include <string>
#include <vector>

#include "lmriv/errors.hpp"
#include "lmriv/graph.hpp"
#include "lmriv/polynomial.hpp"
#include "lmriv/tu_census.hpp"

namespace lmriv {

enum class Route { Direct, Subdivision, TuCensus };

std::string to_string(Route route);

/// LM(G, x) = sum_i (-1)^i b_i x^(n-i), tagged with the route that produced it.
struct LaplacianMatchingPoly {
  IntPoly poly;
  Route route = Route::Direct;

  /// b_0..b_n with the alternating signs removed.
  std::vector<Integer> b() const;
  /// b_i; zero for i outside 0..n.
  Integer b(int i) const;
};

/// Two routes produced different coefficient lists.
class RouteDisagreement : public InternalInconsistency {
 public:
  RouteDisagreement(Route a, const IntPoly& pa, Route b, const IntPoly& pb);
  IntPoly first;
  IntPoly second;
};

/// Sum over matchings M of (-1)^|M| prod_{v not covered by M} (x - d(v)).
LaplacianMatchingPoly lm_direct(const Graph& g);

/// From M(S(G), x) = x^(m-n) LM(G, x^2).
LaplacianMatchingPoly lm_subdivision(const Graph& g);

/// From b_i = total weight of the i-edge spanning TU-subgraphs.
LaplacianMatchingPoly lm_tu(const Graph& g, const CensusLimits& limits = {});

/// Direct route checked against the subdivision route, and against the
/// TU census when `with_census` is set; throws RouteDisagreement.
LaplacianMatchingPoly lm_cross_checked(const Graph& g, bool with_census,
                                       const CensusLimits& limits = {});

/// Certified roots of LM(G, x); throws InternalInconsistency unless exactly
/// n real roots (with multiplicity) are found.
RootSet lm_roots(const Graph& g);

/// Position of lambda_1 relative to max_degree + 1, decided by exact
/// evaluation and a Sturm count above that point.
struct LargestRootBound {
  bool at_least = false;  // lambda_1 >= max_degree + 1
  bool equal = false;     // lambda_1 == max_degree + 1
};

LargestRootBound largest_root_bound(const Graph& g);

/// K_{1,k} for some k >= 1, under any labeling.
bool is_star(const Graph& g);

}  // namespace lmriv
