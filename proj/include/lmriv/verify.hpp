#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lmriv/graph.hpp"
#include "lmriv/tu_census.hpp"

namespace lmriv {

enum class Suite { Identities, Roots, Census, Partitions };

std::string to_string(Suite suite);
/// "identities", "roots", "census", "partitions"; "all" is not a single suite.
std::optional<Suite> parse_suite(std::string_view name);

struct InvariantFailure {
  std::string invariant;
  std::string detail;
};

struct SuiteOutcome {
  long checks = 0;
  std::vector<InvariantFailure> failures;
};

/// Runs one invariant suite on a connected graph, including every candidate
/// edge where the suite has per-edge invariants. Throws SizeCapError when a
/// census step exceeds `limits`.
SuiteOutcome run_suite(const Graph& g, Suite suite, const CensusLimits& limits = {});

}  // namespace lmriv
