#include "doctest.h"
#include "lmriv/laplacian_matching.hpp"
#include "lmriv/verify.hpp"
#include "test_support.hpp"

using namespace lmriv;

namespace {

std::string first_failure(const SuiteOutcome& o) {
  return o.failures.empty() ? "" : o.failures.front().invariant + " " + o.failures.front().detail;
}

}  // namespace

TEST_CASE("suite names") {
  CHECK(parse_suite("roots") == Suite::Roots);
  CHECK(parse_suite("partitions") == Suite::Partitions);
  CHECK(!parse_suite("all").has_value());
  CHECK(to_string(Suite::Census) == "census");
}

TEST_CASE("largest root against max degree + 1") {
  const auto star = largest_root_bound(graphs::star(3));
  CHECK(star.at_least);
  CHECK(star.equal);
  const auto c3 = largest_root_bound(graphs::cycle(3));
  CHECK(c3.at_least);
  CHECK(!c3.equal);
  CHECK(is_star(graphs::complete(2)));
  CHECK(!is_star(graphs::path(4)));
  CHECK(!is_star(Graph(1)));
}

TEST_CASE("identity, root and census suites pass up to order 6") {
  for (const Graph& g : testing::connected_graphs_up_to(6)) {
    for (Suite s : {Suite::Identities, Suite::Roots, Suite::Census}) {
      const SuiteOutcome o = run_suite(g, s);
      INFO(write_graph6(g), " ", to_string(s), " ", first_failure(o));
      CHECK(o.failures.empty());
      CHECK(o.checks > 0);
    }
  }
}

TEST_CASE("partition suite reports failing ratios by name") {
  const SuiteOutcome o = run_suite(parse_graph6("Df{"), Suite::Partitions);
  REQUIRE(!o.failures.empty());
  CHECK(o.failures.front().invariant == "partition_ratio_gt_1");
  CHECK(run_suite(graphs::cycle(5), Suite::Partitions).failures.empty());
  CHECK(run_suite(graphs::path(4), Suite::Partitions).checks == 0);
}

TEST_CASE("suites reject disconnected graphs and respect the census cap") {
  CHECK_THROWS_AS(run_suite(Graph(2), Suite::Roots), DomainError);
  CensusLimits tight;
  tight.max_edges = 4;
  CHECK_THROWS_AS(run_suite(graphs::cycle(5), Suite::Census, tight), SizeCapError);
}
