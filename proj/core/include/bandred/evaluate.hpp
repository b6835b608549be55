#pragma once

#include <map>
#include <vector>

#include "bandred/graph.hpp"
#include "bandred/numbering.hpp"

namespace bandred {

// Histogram of induced edge lengths under a numbering.
struct LengthProfile {
  std::map<int, int> counts;  // length -> number of edges, nonzero entries only
  int max_length = 0;         // bandwidth of the numbering; 0 without edges

  int total() const;
  friend bool operator==(const LengthProfile&, const LengthProfile&) = default;
};

// |label(a) - label(b)|; {a, b} must be an edge of g.
int edge_length(const Graph& g, const Numbering& nu, Edge e);

int bandwidth_of_numbering(const Graph& g, const Numbering& nu);

// Number of edges whose induced length is strictly greater than t.
int count_edges_longer_than(const Graph& g, const Numbering& nu, int t);

LengthProfile length_profile(const Graph& g, const Numbering& nu);

// Entry k (0..v) counts vertices labelled <= k with a neighbor labelled > k.
std::vector<int> boundary_profile(const Graph& g, const Numbering& nu);

// Max over prefixes of boundary_profile: the vertex-isoperimetric number of nu.
int isoperimetric_of_numbering(const Graph& g, const Numbering& nu);

// All-pairs BFS. Throws DisconnectedGraph when g is not connected.
int diameter(const Graph& g);

}  // namespace bandred
