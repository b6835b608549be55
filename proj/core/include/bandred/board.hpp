#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "bandred/numbering.hpp"

namespace bandred {

// Labels laid out on board cells. rows[0] is the bottom row; a label of 0
// marks a cell that is not part of the board. Rows may have different
// lengths (staircase shapes).
struct LabelBoard {
  std::vector<std::vector<int>> rows;

  int height() const noexcept { return static_cast<int>(rows.size()); }
  int width() const noexcept;
  bool is_rectangular() const noexcept;

  friend bool operator==(const LabelBoard&, const LabelBoard&) = default;
};

// A numbering of the grid G_{cols,rows} with the canonical vertex ids.
struct GridNumbering {
  int cols = 0;
  int rows = 0;
  Numbering numbering;

  friend bool operator==(const GridNumbering&, const GridNumbering&) = default;
};

LabelBoard to_board(const GridNumbering& grid);

// Requires a full rectangle whose labels form a bijection onto [rows*cols].
GridNumbering to_grid_numbering(const LabelBoard& board);

// Text form: top row first, labels separated by one space, "." for a hole,
// trailing holes dropped, LF after every row. Lines starting with '#' and
// blank lines are ignored on input.
std::string board_text(const LabelBoard& board);
void write_board(std::ostream& out, const LabelBoard& board);
LabelBoard read_board(std::istream& in);
LabelBoard read_board_file(const std::string& path);

}  // namespace bandred
