#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lmriv/graph.hpp"

namespace lmriv {

/// One input line of a graph6 corpus; `graph` is empty when the line failed
/// to parse, with the reason in `error`.
struct CorpusRecord {
  std::size_t line = 0;  // 1-based
  std::string text;
  std::optional<Graph> graph;
  std::string error;
};

/// Reads one record per line, skipping blank lines and a ">>graph6<<"
/// header line. Malformed lines are kept with their error.
std::vector<CorpusRecord> read_corpus(std::istream& in);
std::vector<CorpusRecord> read_corpus_file(const std::string& path);

/// Runs fn(0..count-1) on up to `jobs` threads (jobs <= 0: hardware
/// concurrency). The first exception thrown by fn is rethrown.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn);

}  // namespace lmriv
