#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lmriv/corpus.hpp"
#include "lmriv/errors.hpp"
#include "lmriv/graph.hpp"
#include "lmriv/polynomial.hpp"

namespace lmriv {

enum class ObstructionTag { Tree, DegSumLe3, BothDeg2, Deg1GirthRatio, GirthRatio7_6 };

/// "TREE", "DEGSUM_LE_3", ...
std::string to_string(ObstructionTag tag);

/// A known result ruling out two-place variation for (G, e), with the
/// quantities that made its hypotheses hold.
struct Obstruction {
  ObstructionTag tag;
  std::vector<std::pair<std::string, long>> witness;
};

/// (2x - d_i - d_j - 4) LM(G) == (2x - d_i - d_j) LM(G+e): the only way one
/// root (necessarily lambda_1 = (d_i + d_j) / 2) could grow by 2.
bool one_place_identity(const IntPoly& lm_g, const IntPoly& lm_ge, int d_i, int d_j);

/// LM(G) Q(x-1) == LM(G+e) Q(x), Q = x^2 - (d_i + d_j + 1) x + d_i d_j:
/// exactly the roots of Q grow by 1 and every other root stays put.
bool two_place_identity(const IntPoly& lm_g, const IntPoly& lm_ge, int d_i, int d_j);

/// Q(x) for the endpoint degrees of the candidate edge.
IntPoly two_place_quadratic(int d_i, int d_j);

bool detect_one_place(const Graph& g, const Edge& e);
bool detect_two_place(const Graph& g, const Edge& e);
std::vector<Obstruction> applicable_obstructions(const Graph& g, const Edge& e);

/// Exact interlacing lambda_i(G+e) >= lambda_i(G) >= lambda_{i+1}(G+e) from
/// a joint root table (p = LM(G), q = LM(G+e)).
bool interlaces(const JointRootTable& table, int order);

struct VariationReport {
  std::string graph;  // graph6 of G
  Edge edge;
  int degree_u = 0;
  int degree_v = 0;
  std::vector<double> deltas;  // lambda_i(G+e) - lambda_i(G), descending order
  bool interlacing_ok = false;
  bool lambda1_strict = false;  // lambda_1(G+e) > lambda_1(G), simple
  Integer sum_increment;
  bool one_place = false;
  bool two_place = false;
  /// Evaluation of the two-place identity at 0 (b~_n Q(0) == b_n Q(-1));
  /// set only when two_place fires.
  std::optional<bool> quotient_relation;
  std::vector<Obstruction> obstructions;
  double near_miss = 0;
};

struct ReportOptions {
  Rational width = Rational(Integer(1), Integer(1000000000000L));
};

/// Throws DomainError for disconnected G or a non-candidate e, and
/// InternalInconsistency if interlacing fails.
VariationReport variation_report(const Graph& g, const Edge& e, const ReportOptions& options = {});

struct ScanNotice {
  std::size_t line = 0;
  std::string message;
};

struct ScanSummary {
  std::size_t records = 0;
  std::size_t graphs = 0;
  std::size_t skipped_disconnected = 0;
  std::size_t malformed = 0;
  std::size_t reports = 0;
  std::size_t one_place = 0;
  std::size_t two_place = 0;
  /// Two-place verdict false and some known result already rules it out.
  std::size_t covered_false = 0;
  /// Two-place verdict false with no known result covering it.
  std::size_t observed_false = 0;
  std::vector<std::string> two_place_hits;  // "graph6 u v"
  std::optional<double> min_near_miss;
};

struct ScanResult {
  std::vector<VariationReport> reports;  // input order, then lexicographic non-edge
  std::vector<ScanNotice> notices;
  ScanSummary summary;
};

ScanResult scan_corpus(std::span<const CorpusRecord> records, int jobs = 0,
                       const ReportOptions& options = {});

}  // namespace lmriv
