#pragma once

#include <string>
#include <vector>

#include "bandred/graph.hpp"

namespace bandcli {

// Where a graph comes from: a named family with integer parameters, or an
// edge-list file (family "file").
struct GraphSource {
  std::string family;
  std::vector<int> params;
  std::string file;

  // Parses "grid 3 3", "wheel 7", "double-wheel", "file path.txt".
  static GraphSource parse(const std::vector<std::string>& tokens);

  bandred::Graph build() const;
  std::string describe() const;
  bool is_grid() const { return family == "grid"; }

  friend bool operator==(const GraphSource&, const GraphSource&) = default;
};

// Family names accepted by gen and solve.
const std::vector<std::string>& family_names();

}  // namespace bandcli
