#pragma once

#include "bandred/graph.hpp"

namespace bandred {

// ceil((v-1)/d) from 1 + d*b >= v. Needs a connected graph with v >= 2.
int diameter_lower_bound(const Graph& g);

// Largest v-k, k in [1, v-1], with edge_count > v(v-1)/2 - k(k+1)/2.
// Every numbering of K_v has i edges of length v-i, so a graph with more edges
// than that cannot fit inside band v-k-1. Returns 0 when no k qualifies.
int density_lower_bound(const Graph& g);

// Per-component diameter bound; also valid for disconnected graphs.
int component_diameter_lower_bound(const Graph& g);

// br_k(K_n) = k(k+1)/2 for 1 <= k <= n-1.
int brk_complete_formula(int n, int k);

}  // namespace bandred
