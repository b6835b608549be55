#pragma once

#include <map>
#include <vector>

#include "bandred/board.hpp"
#include "bandred/generators.hpp"
#include "bandred/graph.hpp"

namespace bandred {

/// Cell set whose rows are contiguous column intervals of varying extent.
///
/// Cells are ranked 1..size() in down-diagonal order: anti-diagonal
/// row+col-1 ascending, then row descending within a diagonal.
class StaircaseBoard {
 public:
  explicit StaircaseBoard(std::vector<GridCoord> cells);

  int size() const noexcept { return static_cast<int>(ordered_.size()); }
  const std::vector<GridCoord>& cells_in_order() const noexcept { return ordered_; }
  bool contains(GridCoord cell) const { return rank_.count(cell) != 0; }
  int rank(GridCoord cell) const;

  // Largest number of cells on one anti-diagonal.
  int max_diagonal_length() const;

  // Row extents as (row, first col, last col), ascending by row.
  struct RowSpan {
    int row, first, last;
  };
  std::vector<RowSpan> row_spans() const;

  // Ranks laid out by row, holes (cells left of the span) as 0.
  LabelBoard to_board() const;

 private:
  std::vector<GridCoord> ordered_;
  std::map<GridCoord, int> rank_;
};

struct LongEdge {
  Edge edge;
  int length = 0;
  friend bool operator==(const LongEdge&, const LongEdge&) = default;
};

// A constructed grid numbering together with its edges longer than threshold.
struct ConstructionReport {
  GridNumbering grid;
  int threshold = 0;
  std::vector<LongEdge> long_edges;  // sorted by edge
};

ConstructionReport report_long_edges(GridNumbering grid, int threshold);

// Down-diagonal lexicographic numbering of G_{m,n}; requires m >= n >= 1.
GridNumbering down_diagonal_lex(int m, int n);

// Cut-and-flip geometry. The block is rows 1..k, columns n-k..m; the flip is
// the reflection (r, c) -> (m+k+1-c, m+k+1-r), an involution that carries the
// block to rows k+1..m-n+2k+1, columns m+1..m+k.
bool in_flip_block(int m, int n, int k, GridCoord cell);
GridCoord flip_cell(int m, int k, GridCoord cell);
StaircaseBoard modified_board(int m, int n, int k);

// Numbering of G_{m,n} with exactly m-n+2k edges longer than n-k.
// Requires m >= n > 2k >= 2. threshold = n-k.
ConstructionReport modified_board_numbering(int m, int n, int k);

// modified_board_numbering(n, n, 1): two edges of length >= n sharing the
// bottom-row vertex in column n-1. threshold = n-1. Requires n >= 3.
ConstructionReport adjacent_reduction_numbering(int n);

// Down-diagonal order on G_n with (n,2) deferred past diagonal n+2 and (n,1)
// past diagonal n+3: two disjoint edges of length >= n. threshold = n-1.
// Requires n >= 3.
ConstructionReport nonadjacent_reduction_numbering(int n);

// Fixed 4x4 numbering and the edge whose removal drops the
// vertex-isoperimetric number from 4 to 3.
struct IsoperimetricExample {
  GridNumbering grid;
  Edge removed;
};
IsoperimetricExample vi_example_board();

}  // namespace bandred
