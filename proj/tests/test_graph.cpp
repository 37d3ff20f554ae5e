#include <algorithm>

#include "doctest.h"
#include "lmriv/graph.hpp"
#include "test_support.hpp"

using namespace lmriv;

namespace {

std::vector<int> sorted_degrees(const Graph& g) {
  std::vector<int> d;
  for (Vertex v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

TEST_CASE("graph6 decoding of small records") {
  const Graph k2 = parse_graph6("A_");
  CHECK(k2.order() == 2);
  CHECK(k2.size() == 1);
  CHECK(k2.adjacent(0, 1));

  // Hand encoding, confirmed with networkx.to_graph6_bytes.
  const Graph c3 = parse_graph6("Bw");
  CHECK(c3 == graphs::cycle(3));
  CHECK(parse_graph6("C~") == graphs::complete(4));
  CHECK(parse_graph6(">>graph6<<C~") == graphs::complete(4));
  CHECK(parse_graph6("C~\r\n") == graphs::complete(4));
  CHECK(parse_graph6("@").order() == 1);
}

TEST_CASE("graph6 encoding") {
  CHECK(write_graph6(graphs::complete(2)) == "A_");
  CHECK(write_graph6(graphs::cycle(3)) == "Bw");
  CHECK(write_graph6(Graph(1)) == "@");
  CHECK(write_graph6(graphs::path(3)) == "Bg");
  CHECK(write_graph6(graphs::star(3)) == "Cs");
  CHECK(write_graph6(graphs::cycle(5)) == "Dhc");
}

TEST_CASE("graph6 long length header") {
  const Graph big = graphs::path(70);
  const std::string text = write_graph6(big);
  CHECK(text[0] == '~');
  CHECK(parse_graph6(text) == big);
}

TEST_CASE("graph6 errors name the byte offset") {
  auto offset_of = [](std::string_view text) -> std::size_t {
    try {
      parse_graph6(text);
    } catch (const Graph6ParseError& err) {
      return err.offset();
    }
    FAIL("expected a parse error");
    return 0;
  };
  CHECK(offset_of("") == 0);
  CHECK(offset_of("B\x01") == 1);
  CHECK(offset_of("Bw?") == 2);
  CHECK(offset_of("C") == 1);
  CHECK(offset_of("B\xc3") == 1);
  CHECK_THROWS_AS(parse_graph6("Bx"), Graph6ParseError);  // padding bits set
}

TEST_CASE("graph6 round trip over all connected graphs up to order 7") {
  for (const Graph& g : testing::connected_graphs_up_to(7)) {
    const std::string text = write_graph6(g);
    CHECK(parse_graph6(text) == g);
    CHECK(write_graph6(parse_graph6(text)) == text);
  }
}

TEST_CASE("graph invariants") {
  for (const Graph& g : testing::connected_graphs_up_to(6)) {
    int degree_sum = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
      degree_sum += g.degree(v);
      CHECK(g.degree(v) <= g.order() - 1);
      CHECK(!g.adjacent(v, v));
      for (Vertex w : g.neighbors(v)) CHECK(g.adjacent(w, v));
    }
    CHECK(degree_sum == 2 * g.size());
    CHECK(g.max_degree() == sorted_degrees(g).back());
  }
}

TEST_CASE("structural metrics") {
  const auto c5 = structural_metrics(graphs::cycle(5));
  CHECK(c5.girth == 5);
  CHECK(c5.cycle_dim == 1);
  CHECK(c5.is_connected);
  CHECK(!c5.is_tree);

  const auto p4 = structural_metrics(graphs::path(4));
  CHECK(!p4.girth.has_value());
  CHECK(p4.cycle_dim == 0);
  CHECK(p4.is_tree);

  const auto k4 = structural_metrics(graphs::complete(4));
  CHECK(k4.girth == 3);
  CHECK(k4.cycle_dim == 3);

  const auto two = structural_metrics(disjoint_union(graphs::cycle(4), graphs::path(2)));
  CHECK(two.component_count == 2);
  CHECK(!two.is_connected);
  CHECK(two.cycle_dim == 1);
  CHECK(two.girth == 4);
}

TEST_CASE("structural metric invariants on the corpus") {
  for (const Graph& g : testing::connected_graphs_up_to(7)) {
    const auto s = structural_metrics(g);
    CHECK(s.cycle_dim == g.size() - g.order() + s.component_count);
    CHECK(s.is_tree == (s.is_connected && s.cycle_dim == 0));
    CHECK(s.girth.has_value() == (s.cycle_dim >= 1));
    if (s.girth) CHECK(*s.girth >= 3);
  }
}

TEST_CASE("subdivision") {
  const Graph p3 = subdivision(graphs::complete(2));
  CHECK(p3 == Graph(3, {{0, 2}, {1, 2}}));

  const Graph c6 = subdivision(graphs::cycle(3));
  const auto m = structural_metrics(c6);
  CHECK(c6.order() == 6);
  CHECK(c6.size() == 6);
  CHECK(m.girth == 6);
  CHECK(m.is_connected);
  CHECK(sorted_degrees(c6) == std::vector<int>(6, 2));

  const Graph spider = subdivision(graphs::star(3));
  CHECK(spider.order() == 7);
  CHECK(spider.size() == 6);
  CHECK(sorted_degrees(spider) == std::vector<int>{1, 1, 1, 2, 2, 2, 3});
}

TEST_CASE("subdivision properties on the corpus") {
  for (const Graph& g : testing::connected_graphs_up_to(6)) {
    const Graph s = subdivision(g);
    CHECK(s.order() == g.order() + g.size());
    CHECK(s.size() == 2 * g.size());
    for (Vertex v = g.order(); v < s.order(); ++v) CHECK(s.degree(v) == 2);
    const auto before = structural_metrics(g);
    if (before.girth) CHECK(*structural_metrics(s).girth == 2 * *before.girth);
  }
}

TEST_CASE("delete_vertex") {
  for (Vertex v = 0; v < 3; ++v) CHECK(delete_vertex(graphs::cycle(3), v) == graphs::complete(2));
  const Graph split = delete_vertex(graphs::path(3), 1);
  CHECK(split.order() == 2);
  CHECK(split.size() == 0);
  for (Vertex v = 0; v < 4; ++v) {
    CHECK(delete_vertex(graphs::complete(4), v) == graphs::cycle(3));
  }
  CHECK_THROWS_AS(delete_vertex(graphs::cycle(3), 3), GraphError);

  for (const Graph& g : testing::connected_graphs_up_to(6)) {
    const int before = structural_metrics(g).component_count;
    for (Vertex v = 0; v < g.order(); ++v) {
      const int after = structural_metrics(delete_vertex(g, v)).component_count;
      CHECK(after >= before - 1);
      CHECK(after - before <= g.degree(v));
    }
  }
}

TEST_CASE("add_edge") {
  CHECK(add_edge(graphs::path(3), 0, 2) == graphs::cycle(3));
  const Graph diamond = add_edge(graphs::cycle(4), 0, 2);
  CHECK(diamond.size() == 5);
  CHECK(sorted_degrees(diamond) == std::vector<int>{2, 2, 3, 3});
  const Graph bicyclic = add_edge(graphs::cycle(5), 0, 2);
  CHECK(bicyclic.size() == 6);
  CHECK(structural_metrics(bicyclic).cycle_dim == 2);

  CHECK_THROWS_AS(add_edge(graphs::cycle(3), 0, 1), GraphError);
  CHECK_THROWS_AS(add_edge(graphs::cycle(3), 1, 1), GraphError);
}

TEST_CASE("non_edges") {
  CHECK(non_edges(graphs::complete(4)).empty());
  CHECK(non_edges(graphs::cycle(4)) == std::vector<Edge>{{0, 2}, {1, 3}});
  CHECK(non_edges(graphs::path(3)) == std::vector<Edge>{{0, 2}});
}

TEST_CASE("corpus file counts") {
  const int expected[] = {1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) {
    const auto graphs_n = testing::connected_graphs(n);
    CHECK(static_cast<int>(graphs_n.size()) == expected[n - 1]);
    for (const Graph& g : graphs_n) {
      CHECK(g.order() == n);
      CHECK(is_connected(g));
    }
  }
}
