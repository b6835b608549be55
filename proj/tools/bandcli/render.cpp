#include "render.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <string>

namespace bandcli {

BandSummary band_summary(const bandred::Graph& g, const bandred::Numbering& nu, int distance) {
  BandSummary s;
  s.distance = distance;
  for (const auto& e : g.edges()) {
    const int length = std::abs(nu.label(e.u) - nu.label(e.v));
    s.max_distance = std::max(s.max_distance, length);
    if (length > distance) ++s.pairs_beyond;
    if (length == distance) ++s.pairs_at;
  }
  return s;
}

std::string render_band(const bandred::Graph& g, const bandred::Numbering& nu, int distance) {
  const int n = g.vertex_count();
  std::ostringstream out;
  for (int i = 1; i <= n; ++i) {
    std::string row(static_cast<std::size_t>(n), '.');
    for (int w : g.neighbors(nu.vertex_at(i))) {
      const int j = nu.label(w);
      const int d = std::abs(i - j);
      row[j - 1] = d < distance ? '#' : (d == distance ? 'o' : 'X');
    }
    out << row << '\n';
  }
  const BandSummary s = band_summary(g, nu, distance);
  out << "max-distance " << s.max_distance << '\n'
      << "pairs-at " << distance << ": " << s.pairs_at << '\n'
      << "pairs-beyond " << distance << ": " << s.pairs_beyond << '\n';
  return out.str();
}

std::string render_ascii(const bandred::LabelBoard& board) {
  int width = 1;
  for (const auto& row : board.rows) {
    for (int v : row) width = std::max(width, static_cast<int>(std::to_string(v).size()));
  }
  std::ostringstream out;
  for (auto row = board.rows.rbegin(); row != board.rows.rend(); ++row) {
    std::string line;
    for (std::size_t c = 0; c < row->size(); ++c) {
      const std::string cell = (*row)[c] == 0 ? "." : std::to_string((*row)[c]);
      if (c > 0) line += ' ';
      line += std::string(static_cast<std::size_t>(width) - cell.size(), ' ') + cell;
    }
    out << line << '\n';
  }
  return out.str();
}

}  // namespace bandcli
