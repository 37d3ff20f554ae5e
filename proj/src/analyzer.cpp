#include "lmriv/analyzer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lmriv/laplacian_matching.hpp"

namespace lmriv {

namespace {

void check_candidate(const Graph& g, const Edge& e) {
  if (e.u < 0 || e.v >= g.order()) throw DomainError("candidate edge endpoint out of range");
  if (e.u == e.v) throw DomainError("candidate edge is a loop");
  if (g.adjacent(e.u, e.v)) {
    throw DomainError("{" + std::to_string(e.u) + "," + std::to_string(e.v) +
                      "} is already an edge");
  }
}

/// Index into the joint table of every root, repeated by multiplicity,
/// descending. Smaller index means larger root.
std::vector<int> expand(const JointRootTable& table, bool second) {
  std::vector<int> out;
  for (std::size_t k = 0; k < table.roots.size(); ++k) {
    const int mult = second ? table.roots[k].multiplicity_q : table.roots[k].multiplicity_p;
    out.insert(out.end(), mult, static_cast<int>(k));
  }
  return out;
}

double near_miss_of(const std::vector<double>& deltas) {
  const std::size_t n = deltas.size();
  if (n == 0) return 0;
  // One place: (2, 0, ..., 0). Two places: 1 at position 0 and at some k.
  double best = std::abs(deltas[0] - 2);
  for (std::size_t i = 1; i < n; ++i) best = std::max(best, std::abs(deltas[i]));
  for (std::size_t k = 1; k < n; ++k) {
    double dist = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const double target = (i == 0 || i == k) ? 1.0 : 0.0;
      dist = std::max(dist, std::abs(deltas[i] - target));
    }
    best = std::min(best, dist);
  }
  return best;
}

Integer b1_of(const IntPoly& lm) { return -lm[lm.degree() - 1]; }

}  // namespace

std::string to_string(ObstructionTag tag) {
  switch (tag) {
    case ObstructionTag::Tree:
      return "TREE";
    case ObstructionTag::DegSumLe3:
      return "DEGSUM_LE_3";
    case ObstructionTag::BothDeg2:
      return "BOTH_DEG_2";
    case ObstructionTag::Deg1GirthRatio:
      return "DEG1_GIRTH_RATIO";
    case ObstructionTag::GirthRatio7_6:
      return "GIRTH_RATIO_7_6";
  }
  return "UNKNOWN";
}

bool one_place_identity(const IntPoly& lm_g, const IntPoly& lm_ge, int d_i, int d_j) {
  const long s = d_i + d_j;
  const IntPoly left = IntPoly{-(s + 4), 2} * lm_g;
  const IntPoly right = IntPoly{-s, 2} * lm_ge;
  return left == right;
}

IntPoly two_place_quadratic(int d_i, int d_j) {
  return IntPoly{static_cast<long>(d_i) * d_j, -(static_cast<long>(d_i) + d_j + 1), 1};
}

bool two_place_identity(const IntPoly& lm_g, const IntPoly& lm_ge, int d_i, int d_j) {
  const IntPoly q = two_place_quadratic(d_i, d_j);
  return lm_g * shift_argument(q, 1) == lm_ge * q;
}

bool detect_one_place(const Graph& g, const Edge& e) {
  check_candidate(g, e);
  return one_place_identity(lm_direct(g).poly, lm_direct(add_edge(g, e.u, e.v)).poly,
                            g.degree(e.u), g.degree(e.v));
}

bool detect_two_place(const Graph& g, const Edge& e) {
  check_candidate(g, e);
  return two_place_identity(lm_direct(g).poly, lm_direct(add_edge(g, e.u, e.v)).poly,
                            g.degree(e.u), g.degree(e.v));
}

std::vector<Obstruction> applicable_obstructions(const Graph& g, const Edge& e) {
  check_candidate(g, e);
  const StructuralMetrics metrics = structural_metrics(g);
  const long du = g.degree(e.u);
  const long dv = g.degree(e.v);
  std::vector<Obstruction> out;
  if (metrics.is_tree) {
    out.push_back({ObstructionTag::Tree, {{"n", g.order()}, {"m", g.size()}}});
  }
  if (du + dv <= 3) {
    out.push_back({ObstructionTag::DegSumLe3, {{"d_i", du}, {"d_j", dv}}});
  }
  if (du == 2 && dv == 2) {
    out.push_back({ObstructionTag::BothDeg2, {{"d_i", du}, {"d_j", dv}}});
  }
  if (metrics.cycle_dim >= 1 && metrics.girth) {
    const long girth = *metrics.girth;
    const long c = metrics.cycle_dim;
    if ((du == 1 || dv == 1) && girth > c) {
      out.push_back({ObstructionTag::Deg1GirthRatio,
                     {{"d_i", du}, {"d_j", dv}, {"g", girth}, {"c", c}}});
    }
    if (6 * girth > 7 * c) {
      out.push_back({ObstructionTag::GirthRatio7_6, {{"g", girth}, {"c", c}}});
    }
  }
  return out;
}

bool interlaces(const JointRootTable& table, int order) {
  const std::vector<int> before = expand(table, false);
  const std::vector<int> after = expand(table, true);
  if (static_cast<int>(before.size()) != order || static_cast<int>(after.size()) != order) {
    return false;
  }
  for (int i = 0; i < order; ++i) {
    if (after[i] > before[i]) return false;  // lambda_i(G+e) >= lambda_i(G)
    if (i + 1 < order && before[i] > after[i + 1]) return false;  // lambda_i(G) >= lambda_{i+1}(G+e)
  }
  return true;
}

VariationReport variation_report(const Graph& g, const Edge& e, const ReportOptions& options) {
  check_candidate(g, e);
  if (!is_connected(g)) throw DomainError("variation report needs a connected graph");
  const Graph ge = add_edge(g, e.u, e.v);
  const IntPoly lm_g = lm_direct(g).poly;
  const IntPoly lm_ge = lm_direct(ge).poly;

  VariationReport report;
  report.graph = write_graph6(g);
  report.edge = e;
  report.degree_u = g.degree(e.u);
  report.degree_v = g.degree(e.v);
  report.sum_increment = b1_of(lm_ge) - b1_of(lm_g);
  report.one_place = one_place_identity(lm_g, lm_ge, report.degree_u, report.degree_v);
  report.two_place = two_place_identity(lm_g, lm_ge, report.degree_u, report.degree_v);
  if (report.two_place) {
    const IntPoly q = two_place_quadratic(report.degree_u, report.degree_v);
    const int n = g.order();
    const LaplacianMatchingPoly before{lm_g, Route::Direct};
    const LaplacianMatchingPoly after{lm_ge, Route::Direct};
    report.quotient_relation =
        after.b(n) * q.evaluate(Integer(0)) == before.b(n) * q.evaluate(Integer(-1));
  }
  report.obstructions = applicable_obstructions(g, e);

  JointRootTable table = joint_roots(lm_g, lm_ge);
  report.interlacing_ok = interlaces(table, g.order());
  if (!report.interlacing_ok) {
    throw InternalInconsistency("interlacing fails for " + report.graph + " + {" +
                                std::to_string(e.u) + "," + std::to_string(e.v) + "}");
  }
  const std::vector<int> before = expand(table, false);
  const std::vector<int> after = expand(table, true);
  report.lambda1_strict = after[0] < before[0] && table.roots[after[0]].multiplicity_q == 1;

  table.refine(options.width);
  report.deltas.reserve(before.size());
  for (std::size_t i = 0; i < before.size(); ++i) {
    const Rational diff =
        table.roots[after[i]].interval.midpoint() - table.roots[before[i]].interval.midpoint();
    report.deltas.push_back(diff.get_d());
  }
  report.near_miss = near_miss_of(report.deltas);
  return report;
}

ScanResult scan_corpus(std::span<const CorpusRecord> records, int jobs,
                       const ReportOptions& options) {
  ScanResult result;
  ScanSummary& summary = result.summary;
  summary.records = records.size();

  struct WorkItem {
    const Graph* graph;
    Edge edge;
  };
  std::vector<WorkItem> work;
  for (const CorpusRecord& record : records) {
    if (!record.graph) {
      ++summary.malformed;
      result.notices.push_back({record.line, "malformed graph6: " + record.error});
      continue;
    }
    if (!is_connected(*record.graph)) {
      ++summary.skipped_disconnected;
      result.notices.push_back({record.line, "skipped disconnected graph " + record.text});
      continue;
    }
    ++summary.graphs;
    for (const Edge& e : non_edges(*record.graph)) work.push_back({&*record.graph, e});
  }

  result.reports.resize(work.size());
  parallel_for(work.size(), jobs, [&](std::size_t i) {
    result.reports[i] = variation_report(*work[i].graph, work[i].edge, options);
  });

  for (const VariationReport& r : result.reports) {
    ++summary.reports;
    if (r.one_place) ++summary.one_place;
    if (r.two_place) {
      ++summary.two_place;
      summary.two_place_hits.push_back(r.graph + " " + std::to_string(r.edge.u) + " " +
                                       std::to_string(r.edge.v));
    } else if (r.obstructions.empty()) {
      ++summary.observed_false;
    } else {
      ++summary.covered_false;
    }
    if (!summary.min_near_miss || r.near_miss < *summary.min_near_miss) {
      summary.min_near_miss = r.near_miss;
    }
  }
  return result;
}

}  // namespace lmriv
