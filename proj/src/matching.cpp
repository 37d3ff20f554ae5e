#include "lmriv/matching.hpp"

#include <bitset>
#include <unordered_map>

namespace lmriv {

namespace {

constexpr int kMaxOrder = 128;
using VertexSet = std::bitset<kMaxOrder>;

/// Memoized expansion over induced subgraphs of one ambient graph. Every
/// subgraph met by the recursion is induced, so its vertex subset is a
/// sound cache key.
class ExpansionSolver {
 public:
  explicit ExpansionSolver(const Graph& g) : n_(g.order()), adj_(g.order()) {
    if (g.order() > kMaxOrder) {
      throw GraphError("matching polynomial supports at most " + std::to_string(kMaxOrder) +
                       " vertices");
    }
    for (const Edge& e : g.edges()) {
      adj_[e.u].set(e.v);
      adj_[e.v].set(e.u);
    }
  }

  VertexSet all() const {
    VertexSet s;
    for (int v = 0; v < n_; ++v) s.set(v);
    return s;
  }

  IntPoly solve(const VertexSet& s) {
    IntPoly result = IntPoly{1};
    VertexSet rest = s;
    while (rest.any()) {
      const VertexSet comp = component_of(first(rest), rest);
      rest &= ~comp;
      result *= solve_connected(comp);
    }
    return result;
  }

  IntPoly expand_at(const VertexSet& s, int v) {
    VertexSet without = s;
    without.reset(v);
    IntPoly result = IntPoly::x_power(1) * solve(without);
    const VertexSet nb = adj_[v] & s;
    for (int u = 0; u < n_; ++u) {
      if (!nb.test(u)) continue;
      VertexSet both = without;
      both.reset(u);
      result -= solve(both);
    }
    return result;
  }

 private:
  static int first(const VertexSet& s) {
    for (int v = 0; v < kMaxOrder; ++v) {
      if (s.test(v)) return v;
    }
    return -1;
  }

  VertexSet component_of(int start, const VertexSet& within) const {
    VertexSet comp;
    comp.set(start);
    VertexSet frontier = comp;
    while (frontier.any()) {
      VertexSet next;
      for (int v = 0; v < n_; ++v) {
        if (frontier.test(v)) next |= adj_[v];
      }
      next &= within & ~comp;
      comp |= next;
      frontier = next;
    }
    return comp;
  }

  IntPoly solve_connected(const VertexSet& comp) {
    const std::size_t size = comp.count();
    if (size == 1) return IntPoly::x_power(1);
    if (size == 2) return IntPoly{-1, 0, 1};
    if (auto it = cache_.find(comp); it != cache_.end()) return it->second;

    int pivot = -1;
    std::size_t best = 0;
    for (int v = 0; v < n_; ++v) {
      if (!comp.test(v)) continue;
      const std::size_t d = (adj_[v] & comp).count();
      if (pivot < 0 || d > best) {
        pivot = v;
        best = d;
      }
    }
    IntPoly result = expand_at(comp, pivot);
    cache_.emplace(comp, result);
    return result;
  }

  int n_;
  std::vector<VertexSet> adj_;
  std::unordered_map<VertexSet, IntPoly> cache_;
};

}  // namespace

IntPoly matching_polynomial(const Graph& g) {
  ExpansionSolver solver(g);
  return solver.solve(solver.all());
}

IntPoly matching_polynomial_at(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.order()) throw GraphError("expansion vertex out of range");
  ExpansionSolver solver(g);
  return solver.expand_at(solver.all(), v);
}

void for_each_matching(const Graph& g,
                       const std::function<void(std::span<const Edge> matching)>& visit) {
  const auto& edges = g.edges();
  std::vector<char> covered(g.order(), 0);
  std::vector<Edge> current;
  current.reserve(g.order() / 2);

  std::function<void(std::size_t)> extend = [&](std::size_t from) {
    visit(current);
    for (std::size_t k = from; k < edges.size(); ++k) {
      const Edge& e = edges[k];
      if (covered[e.u] || covered[e.v]) continue;
      covered[e.u] = covered[e.v] = 1;
      current.push_back(e);
      extend(k + 1);
      current.pop_back();
      covered[e.u] = covered[e.v] = 0;
    }
  };
  extend(0);
}

MatchingProfile matching_counts_oracle(const Graph& g) {
  MatchingProfile profile;
  profile.counts.assign(static_cast<std::size_t>(g.order()) / 2 + 1, 0);
  profile.source = write_graph6(g);
  for_each_matching(g, [&](std::span<const Edge> m) { ++profile.counts[m.size()]; });
  return profile;
}

IntPoly matching_polynomial_from_counts(int order, const MatchingProfile& profile) {
  std::vector<Integer> c(static_cast<std::size_t>(order) + 1, 0);
  for (std::size_t i = 0; i < profile.counts.size(); ++i) {
    const int power = order - 2 * static_cast<int>(i);
    if (power < 0) break;
    c[power] = (i % 2 == 0) ? profile.counts[i] : Integer(-profile.counts[i]);
  }
  return IntPoly(std::move(c));
}

bool within_heilmann_lieb_bound(const Graph& g) {
  const int delta = g.max_degree();
  if (delta < 2) throw GraphError("root bound needs maximum degree at least 2");
  IntPoly m = matching_polynomial(g);
  if (g.order() % 2 == 1) m = exact_divide(m, IntPoly::x_power(1));
  const IntPoly p = even_part_root(m);
  const Rational threshold = 4 * (delta - 1);
  if (p.sign_at(threshold) == 0) return false;
  const IntPoly sf = squarefree_part(p);
  return sf.degree() <= 0 || SturmSequence(sf).count_above(threshold) == 0;
}

}  // namespace lmriv
