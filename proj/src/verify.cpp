#include "lmriv/verify.hpp"

#include <numeric>

#include "lmriv/analyzer.hpp"
#include "lmriv/laplacian_matching.hpp"
#include "lmriv/matching.hpp"

namespace lmriv {

namespace {

std::string edge_text(const Edge& e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

class Checker {
 public:
  void expect(bool ok, const char* invariant, std::string detail = {}) {
    ++outcome.checks;
    if (!ok) outcome.failures.push_back({invariant, std::move(detail)});
  }
  SuiteOutcome outcome;
};

void identities(const Graph& g, const CensusLimits& limits, Checker& c) {
  const IntPoly direct = lm_direct(g).poly;
  c.expect(lm_subdivision(g).poly == direct, "lm_direct_eq_subdivision");
  c.expect(lm_tu(g, limits).poly == direct, "lm_direct_eq_tu");
  const auto b = LaplacianMatchingPoly{direct}.b();
  c.expect(b[1] == 2 * g.size(), "b1_eq_2m", "b1 = " + b[1].get_str());
  c.expect(matching_polynomial(g) ==
               matching_polynomial_from_counts(g.order(), matching_counts_oracle(g)),
           "matching_expansion_eq_oracle");

  for (const Edge& e : non_edges(g)) {
    const Graph ge = add_edge(g, e.u, e.v);
    const IntPoly plus = lm_direct(ge).poly;
    const Integer increment = LaplacianMatchingPoly{plus}.b(1) - b[1];
    c.expect(increment == 2, "b1_increment_eq_2", edge_text(e));
    const int du = g.degree(e.u);
    const int dv = g.degree(e.v);
    c.expect(!one_place_identity(direct, plus, du, dv), "one_place_absent", edge_text(e));
    const bool two = two_place_identity(direct, plus, du, dv);
    if (two) {
      const IntPoly q = two_place_quadratic(du, dv);
      c.expect(plus[0] * q[0] == direct[0] * q.evaluate(Integer(-1)), "quotient_relation",
               edge_text(e));
    }
    const auto obstructions = applicable_obstructions(g, e);
    if (!obstructions.empty()) {
      c.expect(!two, "two_place_absent_when_obstructed",
               edge_text(e) + " " + to_string(obstructions.front().tag));
    }
  }
}

void roots(const Graph& g, Checker& c) {
  const IntPoly p = lm_direct(g).poly;
  const RootSet rs = isolate_real_roots(p);
  c.expect(rs.total_multiplicity() == g.order(), "real_rooted",
           std::to_string(rs.total_multiplicity()) + " real roots");
  bool nonnegative = true;
  for (const auto& r : rs.roots()) nonnegative = nonnegative && r.interval.hi >= 0;
  c.expect(nonnegative, "roots_nonnegative");

  const bool tree = structural_metrics(g).is_tree;
  c.expect((p[0] == 0) == tree, "bn_zero_iff_tree");
  if (g.order() >= 2) {
    const LargestRootBound bound = largest_root_bound(g);
    c.expect(bound.at_least, "lambda1_at_least_delta_plus_1");
    c.expect(bound.equal == is_star(g), "lambda1_equal_iff_star");
  }
  if (g.max_degree() >= 2) c.expect(within_heilmann_lieb_bound(g), "heilmann_lieb");

  for (const Edge& e : non_edges(g)) {
    const IntPoly plus = lm_direct(add_edge(g, e.u, e.v)).poly;
    const JointRootTable table = joint_roots(p, plus);
    c.expect(interlaces(table, g.order()), "interlacing", edge_text(e));
    // The largest joint root belongs to G+e; strictness means G lacks it.
    c.expect(!table.roots.empty() && table.roots.front().multiplicity_q > 0 &&
                 table.roots.front().multiplicity_p == 0,
             "lambda1_strict_increase", edge_text(e));
  }
}

void census(const Graph& g, const CensusLimits& limits, Checker& c) {
  const auto b = tu_coefficients(g, limits);
  c.expect(b == LaplacianMatchingPoly{lm_direct(g).poly}.b(), "b_i_eq_lm");

  const StructuralMetrics metrics = structural_metrics(g);
  if (!metrics.is_tree) {
    const RatioCheck r = ratio_check(g, limits);
    c.expect(r.holds, "ratio_bound",
             "T=" + r.spanning_trees.get_str() + " H1=" + r.unicyclic_spanning.get_str());
    const auto lengths = unicyclic_cycle_lengths(g, limits);
    const long total = std::accumulate(lengths.begin(), lengths.end(), 0L);
    c.expect(Integer(total) == r.spanning_trees * r.cycle_dim, "double_count_equality");
    c.expect(Integer(total) >= r.unicyclic_spanning * r.girth, "double_count_girth");
  }

  const int n = g.order();
  for (const Edge& e : non_edges(g)) {
    const Graph ge = add_edge(g, e.u, e.v);
    const std::vector<Edge> one{e};
    const std::vector<Edge> none;
    const Integer with = filtered_weight(ge, one, none, limits);
    const Integer without = filtered_weight(ge, none, one, limits);
    c.expect(coefficient_b(ge, n, limits) == with + without, "weight_split", edge_text(e));
    c.expect(without == b[n], "weight_without_edge", edge_text(e));
  }
}

void partitions(const Graph& g, const CensusLimits& limits, Checker& c) {
  if (structural_metrics(g).cycle_dim < 1) return;
  const auto candidates = non_edges(g);
  for_each_admissible_partition(g, [&](const AdmissiblePartition& p) {
    std::vector<int> seen(g.order(), 0);
    bool admissible = true;
    for (const auto& block : p.blocks) {
      const Graph induced = induced_subgraph(g, block);
      admissible = admissible && block.size() >= 3 && is_connected(induced) &&
                   induced.size() >= induced.order();
      for (Vertex v : block) ++seen[v];
    }
    for (int count : seen) admissible = admissible && count == 1;
    c.expect(admissible, "partition_admissible");

    for (const Edge& e : candidates) {
      const PartitionRatio r = partition_ratio_check(g, e, p, limits);
      c.expect(r.exceeds_one, "partition_ratio_gt_1",
               edge_text(e) + " type " + (r.type == PartitionType::I ? "I" : "II") +
                   " ratio " + r.ratio.get_str() + " blocks " + std::to_string(p.block_count()));
    }
  });
}

}  // namespace

std::string to_string(Suite suite) {
  switch (suite) {
    case Suite::Identities:
      return "identities";
    case Suite::Roots:
      return "roots";
    case Suite::Census:
      return "census";
    case Suite::Partitions:
      return "partitions";
  }
  return "unknown";
}

std::optional<Suite> parse_suite(std::string_view name) {
  for (Suite s : {Suite::Identities, Suite::Roots, Suite::Census, Suite::Partitions}) {
    if (name == to_string(s)) return s;
  }
  return std::nullopt;
}

SuiteOutcome run_suite(const Graph& g, Suite suite, const CensusLimits& limits) {
  if (!is_connected(g)) throw DomainError("invariant suites need a connected graph");
  Checker c;
  switch (suite) {
    case Suite::Identities:
      identities(g, limits, c);
      break;
    case Suite::Roots:
      roots(g, c);
      break;
    case Suite::Census:
      census(g, limits, c);
      break;
    case Suite::Partitions:
      partitions(g, limits, c);
      break;
  }
  return c.outcome;
}

}  // namespace lmriv
