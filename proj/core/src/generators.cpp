#include "bandred/generators.hpp"

#include <string>
#include <vector>

#include "bandred/errors.hpp"

namespace bandred {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw InvalidArgument(message);
}

}  // namespace

int grid_vertex(int cols, GridCoord cell) { return (cell.row - 1) * cols + cell.col; }

GridCoord grid_cell(int cols, int vertex) {
  return GridCoord{(vertex - 1) / cols + 1, (vertex - 1) % cols + 1};
}

Graph grid(int m, int n) {
  require(m >= 1 && n >= 1, "grid dimensions must be positive");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(2 * m * n));
  for (int r = 1; r <= n; ++r) {
    for (int c = 1; c <= m; ++c) {
      const int id = grid_vertex(m, {r, c});
      if (c < m) edges.emplace_back(id, grid_vertex(m, {r, c + 1}));
      if (r < n) edges.emplace_back(id, grid_vertex(m, {r + 1, c}));
    }
  }
  return Graph(m * n, edges);
}

Graph path(int n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph cycle(int n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(1, n);
  return Graph(n, edges);
}

Graph complete(int n) {
  require(n >= 1, "complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) edges.emplace_back(i, j);
  }
  return Graph(n, edges);
}

Graph wheel(int m) {
  require(m >= 4, "wheel needs m >= 4");
  std::vector<Edge> edges;
  for (int i = 1; i < m - 1; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(1, m - 1);
  for (int i = 1; i < m; ++i) edges.emplace_back(i, m);
  return Graph(m, edges);
}

Graph complete_bipartite(int m, int n) {
  require(n >= 1 && m >= n, "complete bipartite needs m >= n >= 1");
  std::vector<Edge> edges;
  for (int a = 1; a <= m; ++a) {
    for (int b = m + 1; b <= m + n; ++b) edges.emplace_back(a, b);
  }
  return Graph(m + n, edges);
}

Graph double_wheel_axis() {
  std::vector<Edge> edges;
  for (int offset : {0, 7}) {
    for (int i = 1; i < 6; ++i) edges.emplace_back(offset + i, offset + i + 1);
    edges.emplace_back(offset + 1, offset + 6);
    for (int i = 1; i <= 6; ++i) edges.emplace_back(offset + i, offset + 7);
  }
  edges.push_back(double_wheel_axis_edge());
  return Graph(14, edges);
}

Edge double_wheel_axis_edge() { return Edge(7, 14); }

}  // namespace bandred
