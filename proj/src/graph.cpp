#include "lmriv/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace lmriv {

namespace {

constexpr int kGraph6Offset = 63;
constexpr std::string_view kGraph6Header = ">>graph6<<";

void check_vertex(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.order()) {
    throw GraphError("vertex " + std::to_string(v) + " out of range for order " +
                     std::to_string(g.order()));
  }
}

}  // namespace

Graph::Graph(int order) : n_(order) {
  if (order < 0) throw GraphError("negative order");
  adjacency_.assign(static_cast<std::size_t>(order) * order, 0);
  neighbors_.resize(order);
}

Graph::Graph(int order, std::span<const Edge> edges) : Graph(order) {
  edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= n_) throw GraphError("edge endpoint out of range");
    if (e.u == e.v) throw GraphError("self-loop {" + std::to_string(e.u) + "}");
    auto& cell = adjacency_[static_cast<std::size_t>(e.u) * n_ + e.v];
    if (cell) {
      throw GraphError("duplicate edge {" + std::to_string(e.u) + "," +
                       std::to_string(e.v) + "}");
    }
    cell = 1;
    adjacency_[static_cast<std::size_t>(e.v) * n_ + e.u] = 1;
    neighbors_[e.u].push_back(e.v);
    neighbors_[e.v].push_back(e.u);
    edges_.push_back(e);
  }
  for (auto& nb : neighbors_) std::sort(nb.begin(), nb.end());
}

bool Graph::adjacent(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= n_ || b >= n_) return false;
  return adjacency_[static_cast<std::size_t>(a) * n_ + b] != 0;
}

int Graph::max_degree() const noexcept {
  int best = 0;
  for (const auto& nb : neighbors_) best = std::max(best, static_cast<int>(nb.size()));
  return best;
}

std::optional<int> Graph::edge_index(Vertex a, Vertex b) const {
  if (!adjacent(a, b)) return std::nullopt;
  const Edge key(a, b);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i] == key) return static_cast<int>(i);
  }
  return std::nullopt;
}

Graph parse_graph6(std::string_view line) {
  std::size_t base = 0;
  if (line.starts_with(kGraph6Header)) base = kGraph6Header.size();
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) {
    line.remove_suffix(1);
  }

  std::size_t pos = base;
  auto next_value = [&](const char* what) -> int {
    if (pos >= line.size()) throw Graph6ParseError(std::string("truncated ") + what, pos);
    const auto byte = static_cast<unsigned char>(line[pos]);
    if (byte < kGraph6Offset || byte > 126) {
      throw Graph6ParseError("byte " + std::to_string(byte) + " outside graph6 range 63..126",
                             pos);
    }
    ++pos;
    return byte - kGraph6Offset;
  };

  if (pos >= line.size()) throw Graph6ParseError("malformed length header: empty record", pos);
  int n = next_value("length header");
  if (n == 63) {
    if (pos < line.size() && line[pos] == '~') {
      throw Graph6ParseError("malformed length header: orders above 258047 unsupported", pos);
    }
    n = 0;
    for (int k = 0; k < 3; ++k) n = (n << 6) | next_value("length header");
    if (n < 63) throw Graph6ParseError("malformed length header: non-canonical long form", base);
  }

  std::vector<Edge> edges;
  int bits = 0;
  int remaining = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      if (remaining == 0) {
        bits = next_value("adjacency data");
        remaining = 6;
      }
      --remaining;
      if ((bits >> remaining) & 1) edges.emplace_back(i, j);
    }
  }
  if (remaining > 0 && (bits & ((1 << remaining) - 1)) != 0) {
    throw Graph6ParseError("nonzero padding bits", pos - 1);
  }
  if (pos != line.size()) throw Graph6ParseError("trailing garbage", pos);
  return Graph(n, edges);
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kGraph6Offset));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + kGraph6Offset));
    }
  } else {
    throw GraphError("order too large for graph6 writer");
  }
  int bits = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      bits = (bits << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(bits + kGraph6Offset));
        bits = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((bits << (6 - filled)) + kGraph6Offset));
  return out;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<int> seen(g.order(), 0);
  std::vector<std::vector<Vertex>> components;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = 1;
    for (std::size_t k = 0; k < comp.size(); ++k) {
      for (Vertex w : g.neighbors(comp[k])) {
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

StructuralMetrics structural_metrics(const Graph& g) {
  StructuralMetrics metrics;
  const int n = g.order();
  metrics.component_count = static_cast<int>(connected_components(g).size());
  metrics.is_connected = metrics.component_count <= 1;
  metrics.cycle_dim = g.size() - n + metrics.component_count;
  metrics.is_tree = metrics.is_connected && n >= 1 && metrics.cycle_dim == 0;

  // Shortest cycle through BFS from every root; a non-tree edge (a, b)
  // closes a walk of length dist[a] + dist[b] + 1 and the minimum over all
  // roots is the girth.
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(n), parent(n);
  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    std::queue<Vertex> queue;
    dist[root] = 0;
    queue.push(root);
    while (!queue.empty()) {
      const Vertex a = queue.front();
      queue.pop();
      for (Vertex b : g.neighbors(a)) {
        if (dist[b] < 0) {
          dist[b] = dist[a] + 1;
          parent[b] = a;
          queue.push(b);
        } else if (parent[a] != b) {
          best = std::min(best, dist[a] + dist[b] + 1);
        }
      }
    }
  }
  if (metrics.cycle_dim > 0) metrics.girth = best;
  return metrics;
}

Graph subdivision(const Graph& g) {
  const int n = g.order();
  std::vector<Edge> edges;
  edges.reserve(2 * g.size());
  for (int k = 0; k < g.size(); ++k) {
    const Edge& e = g.edges()[k];
    edges.emplace_back(e.u, n + k);
    edges.emplace_back(e.v, n + k);
  }
  return Graph(n + g.size(), edges);
}

Graph delete_vertex(const Graph& g, Vertex v) {
  check_vertex(g, v);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (e.u == v || e.v == v) continue;
    edges.emplace_back(e.u > v ? e.u - 1 : e.u, e.v > v ? e.v - 1 : e.v);
  }
  return Graph(g.order() - 1, edges);
}

Graph add_edge(const Graph& g, Vertex u, Vertex v) {
  check_vertex(g, u);
  check_vertex(g, v);
  if (u == v) throw GraphError("cannot add loop at " + std::to_string(u));
  if (g.adjacent(u, v)) {
    throw GraphError("{" + std::to_string(u) + "," + std::to_string(v) + "} is already an edge");
  }
  std::vector<Edge> edges = g.edges();
  edges.emplace_back(u, v);
  return Graph(g.order(), edges);
}

std::vector<Edge> non_edges(const Graph& g) {
  std::vector<Edge> out;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<int> index(g.order(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    check_vertex(g, vertices[i]);
    if (index[vertices[i]] >= 0) throw GraphError("repeated vertex in induced subgraph");
    index[vertices[i]] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (index[e.u] >= 0 && index[e.v] >= 0) edges.emplace_back(index[e.u], index[e.v]);
  }
  return Graph(static_cast<int>(vertices.size()), edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  for (const Edge& e : b.edges()) edges.emplace_back(e.u + a.order(), e.v + a.order());
  return Graph(a.order() + b.order(), edges);
}

namespace graphs {

Graph path(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph cycle(int n) {
  if (n < 3) throw GraphError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

Graph complete(int n) {
  std::vector<Edge> edges;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) edges.emplace_back(i, j);
  }
  return Graph(n, edges);
}

Graph star(int leaves) {
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph(leaves + 1, edges);
}

}  // namespace graphs

}  // namespace lmriv
