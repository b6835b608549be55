#include "bandred/board.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "bandred/errors.hpp"
#include "bandred/generators.hpp"

namespace bandred {

int LabelBoard::width() const noexcept {
  std::size_t w = 0;
  for (const auto& row : rows) w = std::max(w, row.size());
  return static_cast<int>(w);
}

bool LabelBoard::is_rectangular() const noexcept {
  const auto w = static_cast<std::size_t>(width());
  return std::all_of(rows.begin(), rows.end(), [&](const auto& row) {
    return row.size() == w && std::find(row.begin(), row.end(), 0) == row.end();
  });
}

LabelBoard to_board(const GridNumbering& grid) {
  LabelBoard board;
  board.rows.assign(static_cast<std::size_t>(grid.rows),
                    std::vector<int>(static_cast<std::size_t>(grid.cols), 0));
  for (int r = 1; r <= grid.rows; ++r) {
    for (int c = 1; c <= grid.cols; ++c) {
      board.rows[r - 1][c - 1] = grid.numbering.label(grid_vertex(grid.cols, {r, c}));
    }
  }
  return board;
}

GridNumbering to_grid_numbering(const LabelBoard& board) {
  if (board.rows.empty() || !board.is_rectangular()) {
    throw InvalidArgument("grid numbering needs a full rectangular board");
  }
  GridNumbering grid;
  grid.rows = board.height();
  grid.cols = board.width();
  std::vector<int> labels(static_cast<std::size_t>(grid.rows * grid.cols));
  for (int r = 1; r <= grid.rows; ++r) {
    for (int c = 1; c <= grid.cols; ++c) {
      labels[grid_vertex(grid.cols, {r, c}) - 1] = board.rows[r - 1][c - 1];
    }
  }
  grid.numbering = Numbering::from_labels(std::move(labels));
  return grid;
}

void write_board(std::ostream& out, const LabelBoard& board) {
  for (auto row = board.rows.rbegin(); row != board.rows.rend(); ++row) {
    auto end = row->end();
    while (end != row->begin() && *(end - 1) == 0) --end;
    for (auto it = row->begin(); it != end; ++it) {
      if (it != row->begin()) out << ' ';
      if (*it == 0) {
        out << '.';
      } else {
        out << *it;
      }
    }
    out << '\n';
  }
}

std::string board_text(const LabelBoard& board) {
  std::ostringstream out;
  write_board(out, board);
  return out.str();
}

LabelBoard read_board(std::istream& in) {
  LabelBoard board;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream tokens(line);
    std::vector<int> row;
    std::string token;
    while (tokens >> token) {
      if (token == ".") {
        row.push_back(0);
        continue;
      }
      int value = 0;
      const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc() || ptr != token.data() + token.size() || value < 1) {
        throw ParseError(line_no, "bad board token \"" + token + "\"");
      }
      row.push_back(value);
    }
    board.rows.push_back(std::move(row));
  }
  if (board.rows.empty()) throw ParseError(line_no, "empty board");
  std::reverse(board.rows.begin(), board.rows.end());
  return board;
}

LabelBoard read_board_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path);
  return read_board(in);
}

}  // namespace bandred
