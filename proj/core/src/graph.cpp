#include "bandred/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "bandred/errors.hpp"

namespace bandred {

Graph::Graph(int vertex_count) {
  if (vertex_count < 1) {
    throw InvalidArgument("graph needs at least one vertex");
  }
  adjacency_.resize(static_cast<std::size_t>(vertex_count));
}

Graph::Graph(int vertex_count, std::span<const Edge> edges) : Graph(vertex_count) {
  for (const Edge& e : edges) {
    check_vertex(e.u);
    check_vertex(e.v);
    if (e.u == e.v) {
      throw InvalidArgument("self-loop at vertex " + std::to_string(e.u));
    }
    adjacency_[e.u - 1].push_back(e.v);
    adjacency_[e.v - 1].push_back(e.u);
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw InvalidArgument("duplicate edge");
    }
  }
  edge_count_ = static_cast<int>(edges.size());
}

void Graph::check_vertex(int vertex) const {
  if (vertex < 1 || vertex > vertex_count()) {
    throw InvalidArgument("vertex id " + std::to_string(vertex) + " out of range [1, " +
                          std::to_string(vertex_count()) + "]");
  }
}

std::span<const int> Graph::neighbors(int vertex) const {
  check_vertex(vertex);
  return adjacency_[vertex - 1];
}

bool Graph::has_edge(int a, int b) const {
  check_vertex(a);
  check_vertex(b);
  const auto& list = adjacency_[a - 1];
  return std::binary_search(list.begin(), list.end(), b);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (int u = 1; u <= vertex_count(); ++u) {
    for (int w : adjacency_[u - 1]) {
      if (u < w) out.emplace_back(u, w);
    }
  }
  return out;
}

Graph Graph::without_edges(std::span<const Edge> removed) const {
  std::vector<Edge> drop(removed.begin(), removed.end());
  std::sort(drop.begin(), drop.end());
  for (const Edge& e : drop) {
    if (!has_edge(e.u, e.v)) {
      throw InvalidArgument("cannot remove non-edge {" + std::to_string(e.u) + "," +
                            std::to_string(e.v) + "}");
    }
  }
  std::vector<Edge> kept;
  for (const Edge& e : edges()) {
    if (!std::binary_search(drop.begin(), drop.end(), e)) kept.push_back(e);
  }
  return Graph(vertex_count(), kept);
}

bool Graph::is_connected() const {
  const int n = vertex_count();
  if (n == 0) return true;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::queue<int> frontier;
  frontier.push(1);
  seen[0] = 1;
  int reached = 1;
  while (!frontier.empty()) {
    const int u = frontier.front();
    frontier.pop();
    for (int w : adjacency_[u - 1]) {
      if (!seen[w - 1]) {
        seen[w - 1] = 1;
        ++reached;
        frontier.push(w);
      }
    }
  }
  return reached == n;
}

}  // namespace bandred
