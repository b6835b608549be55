#pragma once

#include <iosfwd>
#include <string>

#include "bandred/graph.hpp"

namespace bandred {

// Edge-list text: first line "v e", then e lines "u w" with 1-based ids.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

void write_edge_list(std::ostream& out, const Graph& g);
std::string to_edge_list(const Graph& g);

}  // namespace bandred
