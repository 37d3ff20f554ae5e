#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lmriv {

using Vertex = int;

/// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Graph6ParseError : public std::runtime_error {
 public:
  Graph6ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (byte offset " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Simple undirected graph on vertices 0..n-1. Immutable once built; the
/// edit operations below return new graphs. Edges keep their insertion
/// order, which fixes the labeling of subdivision vertices.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int order);
  Graph(int order, std::span<const Edge> edges);
  Graph(int order, std::initializer_list<Edge> edges)
      : Graph(order, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(edges_.size()); }

  bool adjacent(Vertex a, Vertex b) const;
  int degree(Vertex v) const { return static_cast<int>(neighbors_.at(v).size()); }
  const std::vector<Vertex>& neighbors(Vertex v) const { return neighbors_.at(v); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  int max_degree() const noexcept;

  /// Index of {a, b} in edges(), or nullopt when not an edge.
  std::optional<int> edge_index(Vertex a, Vertex b) const;

  /// Same labeled edge set (edge order ignored).
  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adjacency_ == b.adjacency_;
  }

 private:
  int n_ = 0;
  std::vector<std::uint8_t> adjacency_;
  std::vector<std::vector<Vertex>> neighbors_;
  std::vector<Edge> edges_;
};

struct StructuralMetrics {
  std::optional<int> girth;  // nullopt for acyclic graphs
  int cycle_dim = 0;
  bool is_tree = false;
  bool is_connected = false;
  int component_count = 0;
};

Graph parse_graph6(std::string_view line);
std::string write_graph6(const Graph& g);

StructuralMetrics structural_metrics(const Graph& g);
std::vector<std::vector<Vertex>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

Graph subdivision(const Graph& g);
Graph delete_vertex(const Graph& g, Vertex v);
Graph add_edge(const Graph& g, Vertex u, Vertex v);
std::vector<Edge> non_edges(const Graph& g);

/// Subgraph induced by `vertices`; vertex i of the result is vertices[i].
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);
Graph disjoint_union(const Graph& a, const Graph& b);

namespace graphs {
Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph star(int leaves);
}  // namespace graphs

}  // namespace lmriv
