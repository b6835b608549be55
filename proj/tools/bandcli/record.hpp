#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bandred/graph.hpp"
#include "bandred/solvers.hpp"
#include "graph_source.hpp"

namespace bandcli {

/// One solver run, serialized as a single-line JSON object so runs can be
/// appended to a log file. Schema is documented in README.md.
struct ResultRecord {
  std::string command = "solve";
  std::string what;  // bandwidth | brk | deletion | mle | vi
  GraphSource input;
  std::optional<int> k;
  std::optional<int> t;
  std::optional<int> cap;
  std::uint64_t budget_nodes = 0;

  int value = 0;
  bandred::Status status = bandred::Status::unknown;
  int lower_bound = 0;
  std::uint64_t nodes_expanded = 0;
  std::int64_t elapsed_us = 0;

  std::optional<std::vector<int>> witness;  // labels by vertex id
  std::optional<std::string> witness_board; // grid sources only, top row first
  std::optional<std::vector<bandred::Edge>> deleted_edges;

  friend bool operator==(const ResultRecord&, const ResultRecord&) = default;
};

std::string to_json_line(const ResultRecord& record);
ResultRecord parse_record(const std::string& line);

}  // namespace bandcli
