#pragma once

#include <compare>
#include <span>
#include <vector>

namespace bandred {

// Undirected edge between 1-based vertex ids, stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 1..vertex_count.
///
/// Immutable once built. Neighbor lists are sorted ascending; self-loops and
/// duplicate edges are rejected at construction.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertex_count);
  Graph(int vertex_count, std::span<const Edge> edges);

  int vertex_count() const noexcept { return static_cast<int>(adjacency_.size()); }
  int edge_count() const noexcept { return edge_count_; }

  std::span<const int> neighbors(int vertex) const;
  int degree(int vertex) const { return static_cast<int>(neighbors(vertex).size()); }
  bool has_edge(int a, int b) const;

  // All edges, u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  Graph without_edges(std::span<const Edge> removed) const;

  bool is_connected() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(int vertex) const;

  std::vector<std::vector<int>> adjacency_;
  int edge_count_ = 0;
};

}  // namespace bandred
