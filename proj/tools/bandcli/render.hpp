#pragma once

#include <string>

#include "bandred/board.hpp"
#include "bandred/graph.hpp"
#include "bandred/numbering.hpp"

namespace bandcli {

// Symmetric pairs of the permuted adjacency matrix, classified by distance
// from the main diagonal (= induced edge length).
struct BandSummary {
  int max_distance = 0;
  int distance = 0;
  int pairs_beyond = 0;  // length > distance
  int pairs_at = 0;      // length == distance
};

BandSummary band_summary(const bandred::Graph& g, const bandred::Numbering& nu, int distance);

// Adjacency matrix with rows and columns ordered by label: '.' zero,
// '#' inside the band, 'o' exactly at `distance`, 'X' beyond it. Followed by
// the summary lines.
std::string render_band(const bandred::Graph& g, const bandred::Numbering& nu, int distance);

// Right-aligned columns, top row first.
std::string render_ascii(const bandred::LabelBoard& board);

}  // namespace bandcli
