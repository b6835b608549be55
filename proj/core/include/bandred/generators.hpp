#pragma once

#include <compare>

#include "bandred/graph.hpp"

namespace bandred {

// Cell of an n-row, m-column board. Rows count bottom-up from 1, columns
// left-to-right from 1. The text board format prints the top row first.
struct GridCoord {
  int row = 1;
  int col = 1;

  // Anti-diagonal index, 1 at the bottom-left corner.
  int diagonal() const noexcept { return row + col - 1; }

  friend auto operator<=>(const GridCoord&, const GridCoord&) = default;
};

// Vertex id of a cell on a board with `cols` columns: (row-1)*cols + col.
int grid_vertex(int cols, GridCoord cell);
GridCoord grid_cell(int cols, int vertex);

// G_{m,n}: m columns, n rows, nm vertices, 2mn-m-n edges.
Graph grid(int m, int n);

Graph path(int n);
Graph cycle(int n);
Graph complete(int n);

// Cycle on vertices 1..m-1 plus center m adjacent to all of them.
Graph wheel(int m);

// Parts {1..m} and {m+1..m+n}; requires m >= n >= 1.
Graph complete_bipartite(int m, int n);

// Two W_7 wheels (centers 7 and 14) joined by an edge between the centers.
Graph double_wheel_axis();
Edge double_wheel_axis_edge();

}  // namespace bandred
