#include "bandred/constructions.hpp"

#include <algorithm>
#include <string>

#include "bandred/errors.hpp"
#include "bandred/evaluate.hpp"

namespace bandred {

namespace {

bool down_diagonal_before(GridCoord a, GridCoord b) {
  if (a.diagonal() != b.diagonal()) return a.diagonal() < b.diagonal();
  return a.row > b.row;
}

std::vector<GridCoord> rectangle_cells(int m, int n) {
  std::vector<GridCoord> cells;
  cells.reserve(static_cast<std::size_t>(m * n));
  for (int r = 1; r <= n; ++r) {
    for (int c = 1; c <= m; ++c) cells.push_back({r, c});
  }
  return cells;
}

// Labels cells of G_{m,n} by their position in `order` (1-based).
GridNumbering number_by_sequence(int m, int n, const std::vector<GridCoord>& order) {
  std::vector<int> labels(static_cast<std::size_t>(m * n), 0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    labels[grid_vertex(m, order[i]) - 1] = static_cast<int>(i) + 1;
  }
  return GridNumbering{m, n, Numbering::from_labels(std::move(labels))};
}

}  // namespace

StaircaseBoard::StaircaseBoard(std::vector<GridCoord> cells) : ordered_(std::move(cells)) {
  std::sort(ordered_.begin(), ordered_.end(), down_diagonal_before);
  for (std::size_t i = 0; i < ordered_.size(); ++i) {
    const GridCoord cell = ordered_[i];
    if (cell.row < 1 || cell.col < 1) throw InvalidArgument("board cells are 1-based");
    if (!rank_.emplace(cell, static_cast<int>(i) + 1).second) {
      throw InvalidArgument("duplicate board cell");
    }
  }
  std::map<int, std::pair<int, int>> extent;  // row -> (first, count)
  for (const auto& [cell, r] : rank_) {
    auto [it, fresh] = extent.try_emplace(cell.row, cell.col, 0);
    if (cell.col != it->second.first + it->second.second) {
      throw InvalidArgument("row " + std::to_string(cell.row) + " is not a contiguous interval");
    }
    ++it->second.second;
  }
}

int StaircaseBoard::rank(GridCoord cell) const {
  const auto it = rank_.find(cell);
  if (it == rank_.end()) throw InvalidArgument("cell is not on the board");
  return it->second;
}

int StaircaseBoard::max_diagonal_length() const {
  int best = 0, run = 0, current = 0;
  for (const GridCoord& cell : ordered_) {
    run = cell.diagonal() == current ? run + 1 : 1;
    current = cell.diagonal();
    best = std::max(best, run);
  }
  return best;
}

std::vector<StaircaseBoard::RowSpan> StaircaseBoard::row_spans() const {
  std::vector<RowSpan> spans;
  for (const auto& [cell, r] : rank_) {
    if (spans.empty() || spans.back().row != cell.row) {
      spans.push_back({cell.row, cell.col, cell.col});
    } else {
      spans.back().last = cell.col;
    }
  }
  return spans;
}

LabelBoard StaircaseBoard::to_board() const {
  LabelBoard board;
  int top = 0;
  for (const auto& [cell, r] : rank_) top = std::max(top, cell.row);
  board.rows.resize(static_cast<std::size_t>(top));
  for (const auto& [cell, r] : rank_) {
    auto& row = board.rows[cell.row - 1];
    if (static_cast<int>(row.size()) < cell.col) row.resize(static_cast<std::size_t>(cell.col), 0);
    row[cell.col - 1] = r;
  }
  return board;
}

ConstructionReport report_long_edges(GridNumbering grid, int threshold) {
  ConstructionReport report;
  report.threshold = threshold;
  const Graph g = bandred::grid(grid.cols, grid.rows);
  for (const Edge& e : g.edges()) {
    const int length = edge_length(g, grid.numbering, e);
    if (length > threshold) report.long_edges.push_back({e, length});
  }
  report.grid = std::move(grid);
  return report;
}

GridNumbering down_diagonal_lex(int m, int n) {
  if (n < 1 || m < n) throw InvalidArgument("down_diagonal_lex needs m >= n >= 1");
  auto cells = rectangle_cells(m, n);
  std::sort(cells.begin(), cells.end(), down_diagonal_before);
  return number_by_sequence(m, n, cells);
}

bool in_flip_block(int m, int n, int k, GridCoord cell) {
  return cell.row >= 1 && cell.row <= k && cell.col >= n - k && cell.col <= m;
}

GridCoord flip_cell(int m, int k, GridCoord cell) {
  return GridCoord{m + k + 1 - cell.col, m + k + 1 - cell.row};
}

namespace {

void check_modified_range(int m, int n, int k) {
  if (k < 1 || n <= 2 * k || m < n) {
    throw InvalidArgument("cut-and-flip numbering needs m >= n > 2k >= 2 (got m=" +
                          std::to_string(m) + ", n=" + std::to_string(n) +
                          ", k=" + std::to_string(k) + ")");
  }
}

}  // namespace

StaircaseBoard modified_board(int m, int n, int k) {
  check_modified_range(m, n, k);
  std::vector<GridCoord> cells;
  cells.reserve(static_cast<std::size_t>(m * n));
  for (const GridCoord& cell : rectangle_cells(m, n)) {
    cells.push_back(in_flip_block(m, n, k, cell) ? flip_cell(m, k, cell) : cell);
  }
  return StaircaseBoard(std::move(cells));
}

ConstructionReport modified_board_numbering(int m, int n, int k) {
  const StaircaseBoard board = modified_board(m, n, k);
  std::vector<int> labels(static_cast<std::size_t>(m * n), 0);
  for (const GridCoord& cell : rectangle_cells(m, n)) {
    const GridCoord placed = in_flip_block(m, n, k, cell) ? flip_cell(m, k, cell) : cell;
    labels[grid_vertex(m, cell) - 1] = board.rank(placed);
  }
  return report_long_edges(GridNumbering{m, n, Numbering::from_labels(std::move(labels))},
                           n - k);
}

ConstructionReport adjacent_reduction_numbering(int n) {
  if (n < 3) throw InvalidArgument("adjacent reduction numbering needs n >= 3");
  auto report = modified_board_numbering(n, n, 1);
  report.threshold = n - 1;
  return report;
}

ConstructionReport nonadjacent_reduction_numbering(int n) {
  if (n < 3) throw InvalidArgument("non-adjacent reduction numbering needs n >= 3");
  const GridCoord corner{n, 1};
  const GridCoord second{n, 2};

  auto cells = rectangle_cells(n, n);
  std::sort(cells.begin(), cells.end(), down_diagonal_before);
  std::vector<GridCoord> order;
  order.reserve(cells.size());
  for (const GridCoord& cell : cells) {
    if (cell != corner && cell != second) order.push_back(cell);
  }

  // Insert after the last cell whose diagonal is <= limit, but never before
  // position `floor`.
  const auto insert_after_diagonal = [&](GridCoord cell, int limit, std::size_t floor) {
    std::size_t at = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (order[i].diagonal() <= limit) at = i + 1;
    }
    at = std::max(at, floor);
    order.insert(order.begin() + static_cast<std::ptrdiff_t>(at), cell);
    return at;
  };
  const std::size_t second_at = insert_after_diagonal(second, n + 2, 0);
  insert_after_diagonal(corner, n + 3, second_at + 1);

  return report_long_edges(number_by_sequence(n, n, order), n - 1);
}

IsoperimetricExample vi_example_board() {
  // Bottom row first.
  const LabelBoard board{{{1, 3, 6, 10}, {2, 5, 9, 11}, {4, 8, 12, 14}, {7, 13, 15, 16}}};
  IsoperimetricExample example{to_grid_numbering(board), Edge(grid_vertex(4, {4, 1}),
                                                              grid_vertex(4, {4, 2}))};
  return example;
}

}  // namespace bandred
