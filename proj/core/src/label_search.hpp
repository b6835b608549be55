#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "bandred/graph.hpp"
#include "bandred/solvers.hpp"

namespace bandred::detail {

// Shared node/time accounting for one solver call.
class SearchMeter {
 public:
  explicit SearchMeter(const Budget& budget);

  // Counts one expanded node; false once the budget is spent.
  bool tick();
  bool exhausted() const noexcept { return exhausted_; }
  std::uint64_t nodes() const noexcept { return nodes_; }
  std::chrono::microseconds elapsed() const;

 private:
  Budget budget_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  std::chrono::steady_clock::time_point start_;
};

/// Sequential label placement: label 1, 2, ... is given to one unplaced
/// vertex at a time, candidates in ascending id. An edge is long when its
/// induced length exceeds `threshold`. find(a) looks for a numbering with at
/// most `a` long edges.
///
/// Pruning:
///  - a placed vertex u with label j can only take short edges to labels
///    <= j + threshold, so surplus unplaced neighbors are committed long;
///  - the union of unplaced neighbors of all placed vertices labelled <= j
///    must fit in labels up to j + threshold, each overflow vertex costs one
///    long edge;
///  - the vertex labelled 1 must have a smaller id than the vertex labelled
///    v (reversal symmetry);
///  - states proven infeasible are memoized. A state is the placed set, the
///    vertex labelled 1, and the last `threshold` placed vertices that still
///    have unplaced neighbors, in label order.
class LabelSearch {
 public:
  LabelSearch(const Graph& g, int threshold, SearchMeter& meter);

  struct Found {
    std::vector<int> order;  // 1-based vertex ids by label
    int long_edges = 0;
  };

  // nullopt means no numbering within the allowance or the meter ran out;
  // check meter.exhausted() to tell them apart.
  std::optional<Found> find(int allowance);

 private:
  using Mask = std::uint64_t;

  bool search(int placed_count);
  int lower_bound(int next_label) const;
  std::string state_key(int placed_count) const;

  int n_;
  int threshold_;
  SearchMeter& meter_;
  std::vector<Mask> adjacency_;

  int allowance_ = 0;
  Mask placed_ = 0;
  int cost_ = 0;
  std::vector<int> order_;       // 0-based vertex by label-1
  std::vector<int> label_;       // 0 when unplaced
  std::vector<int> open_degree_; // unplaced neighbors

  std::unordered_map<std::string, int> failed_;  // state -> largest refuted slack
  std::size_t memo_limit_ = std::size_t{1} << 21;
};

}  // namespace bandred::detail
