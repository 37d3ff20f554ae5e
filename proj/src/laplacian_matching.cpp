#include "lmriv/laplacian_matching.hpp"

#include "lmriv/matching.hpp"

namespace lmriv {

std::string to_string(Route route) {
  switch (route) {
    case Route::Direct:
      return "direct";
    case Route::Subdivision:
      return "subdivision";
    case Route::TuCensus:
      return "tu-census";
  }
  return "unknown";
}

std::vector<Integer> LaplacianMatchingPoly::b() const {
  const int n = poly.degree();
  std::vector<Integer> out(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) out[i] = b(i);
  return out;
}

Integer LaplacianMatchingPoly::b(int i) const {
  const int n = poly.degree();
  if (i < 0 || i > n) return 0;
  Integer c = poly[n - i];
  return i % 2 == 0 ? c : Integer(-c);
}

RouteDisagreement::RouteDisagreement(Route a, const IntPoly& pa, Route b, const IntPoly& pb)
    : InternalInconsistency("routes disagree: " + to_string(a) + " gives " + pa.to_string() +
                            ", " + to_string(b) + " gives " + pb.to_string()),
      first(pa),
      second(pb) {}

LaplacianMatchingPoly lm_direct(const Graph& g) {
  const int n = g.order();
  std::vector<IntPoly> factor(n);
  for (Vertex v = 0; v < n; ++v) factor[v] = IntPoly::linear(g.degree(v));

  std::vector<char> covered(n, 0);
  IntPoly total;
  for_each_matching(g, [&](std::span<const Edge> m) {
    std::fill(covered.begin(), covered.end(), 0);
    for (const Edge& e : m) covered[e.u] = covered[e.v] = 1;
    IntPoly term = IntPoly{1};
    for (Vertex v = 0; v < n; ++v) {
      if (!covered[v]) term *= factor[v];
    }
    if (m.size() % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  });
  return {total, Route::Direct};
}

LaplacianMatchingPoly lm_subdivision(const Graph& g) {
  const int n = g.order();
  const int m = g.size();
  IntPoly p = matching_polynomial(subdivision(g));
  if (m >= n) {
    p = exact_divide(p, IntPoly::x_power(m - n));
  } else {
    p *= IntPoly::x_power(n - m);
  }
  try {
    return {even_part_root(p), Route::Subdivision};
  } catch (const std::domain_error& err) {
    throw InternalInconsistency("subdivision route parity violation: " + p.to_string() + " has " +
                                err.what());
  }
}

LaplacianMatchingPoly lm_tu(const Graph& g, const CensusLimits& limits) {
  const int n = g.order();
  const std::vector<Integer> b = tu_coefficients(g, limits);
  std::vector<Integer> c(static_cast<std::size_t>(n) + 1);
  c[n] = 1;
  for (int i = 1; i <= n; ++i) c[n - i] = i % 2 == 0 ? b[i] : Integer(-b[i]);
  return {IntPoly(std::move(c)), Route::TuCensus};
}

LaplacianMatchingPoly lm_cross_checked(const Graph& g, bool with_census,
                                       const CensusLimits& limits) {
  const LaplacianMatchingPoly direct = lm_direct(g);
  const LaplacianMatchingPoly sub = lm_subdivision(g);
  if (!(direct.poly == sub.poly)) {
    throw RouteDisagreement(direct.route, direct.poly, sub.route, sub.poly);
  }
  if (with_census) {
    const LaplacianMatchingPoly tu = lm_tu(g, limits);
    if (!(direct.poly == tu.poly)) {
      throw RouteDisagreement(direct.route, direct.poly, tu.route, tu.poly);
    }
  }
  return direct;
}

RootSet lm_roots(const Graph& g) {
  const IntPoly p = lm_direct(g).poly;
  RootSet roots = isolate_real_roots(p);
  if (roots.total_multiplicity() != g.order()) {
    throw InternalInconsistency("Laplacian matching polynomial " + p.to_string() + " has " +
                                std::to_string(roots.total_multiplicity()) +
                                " real roots, expected " + std::to_string(g.order()));
  }
  return roots;
}

LargestRootBound largest_root_bound(const Graph& g) {
  const IntPoly p = lm_direct(g).poly;
  const Rational point = g.max_degree() + 1;
  const IntPoly sf = squarefree_part(p);
  const bool root_at = p.sign_at(point) == 0;
  const bool above = sf.degree() > 0 && SturmSequence(sf).count_above(point) > 0;
  return {root_at || above, root_at && !above};
}

bool is_star(const Graph& g) {
  return g.order() >= 2 && g.size() == g.order() - 1 && g.max_degree() == g.order() - 1;
}

}  // namespace lmriv
