#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "bandred/graph.hpp"
#include "bandred/numbering.hpp"

namespace bandred {

// Largest graph the exact label searches accept (vertex sets are 64-bit masks).
inline constexpr int kMaxSearchVertices = 64;

/// Search limits. Exhausting either one ends the search with a non-optimal
/// status instead of an exception.
struct Budget {
  std::uint64_t max_nodes = 100'000'000;
  std::optional<std::chrono::milliseconds> wall_clock;

  static Budget nodes(std::uint64_t n) { return Budget{n, std::nullopt}; }
};

enum class Status { optimal, upper_bound, unknown };

std::string_view to_string(Status status);
std::optional<Status> parse_status(std::string_view text);

enum class Decision { yes, no, unknown };

std::string_view to_string(Decision decision);

/// Result of an exact search.
///
/// value is the proven optimum when status is optimal, the witnessed value for
/// upper_bound, and the best known upper bound (or lower_bound when no
/// witness exists) for unknown. lower_bound is what the search proved.
struct SearchOutcome {
  int value = 0;
  Status status = Status::unknown;
  int lower_bound = 0;
  std::optional<Numbering> witness;
  std::optional<std::vector<Edge>> deleted_edges;  // deletion search only
  std::uint64_t nodes_expanded = 0;
  std::chrono::microseconds elapsed{0};
};

Decision bandwidth_decision(const Graph& g, int b, const Budget& budget = {});

SearchOutcome exact_bandwidth(const Graph& g, const Budget& budget = {});

// Minimum over numberings of the number of edges longer than t.
// `incumbent`, when given, seeds the branch and bound with a known numbering.
SearchOutcome min_long_edges(const Graph& g, int t, const Budget& budget = {},
                             std::optional<Numbering> incumbent = std::nullopt);

// br_k(g) = min_long_edges(g, b - k) where b is the bandwidth of g.
// Throws InvalidArgument when b == 0 or k is outside [1, b]. An incumbent
// (e.g. a grid construction) seeds the branch and bound.
SearchOutcome reduction_number(const Graph& g, int k, const Budget& budget = {},
                               std::optional<Numbering> incumbent = std::nullopt);

// br_k(g) by iterative deepening over deleted edge sets.
SearchOutcome reduction_by_deletion(const Graph& g, int k, const Budget& budget = {});

// Exact vertex-isoperimetric number by subset dynamic programming. Rejects
// graphs with more than `cap` vertices.
SearchOutcome vertex_isoperimetric(const Graph& g, int cap = 20);

}  // namespace bandred
