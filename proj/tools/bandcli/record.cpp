#include "record.hpp"

#include "bandred/errors.hpp"
#include "json.hpp"

namespace bandcli {

using nlohmann::json;

std::string to_json_line(const ResultRecord& r) {
  json j;
  j["command"] = r.command;
  j["what"] = r.what;
  if (r.input.family == "file") {
    j["input"] = {{"family", "file"}, {"file", r.input.file}};
  } else {
    j["input"] = {{"family", r.input.family}, {"params", r.input.params}};
  }
  json params = {{"budget_nodes", r.budget_nodes}};
  if (r.k) params["k"] = *r.k;
  if (r.t) params["t"] = *r.t;
  if (r.cap) params["cap"] = *r.cap;
  j["params"] = params;
  j["value"] = r.value;
  j["status"] = std::string(bandred::to_string(r.status));
  j["lower_bound"] = r.lower_bound;
  j["nodes_expanded"] = r.nodes_expanded;
  j["elapsed_us"] = r.elapsed_us;
  if (r.witness) j["witness"] = *r.witness;
  if (r.witness_board) j["witness_board"] = *r.witness_board;
  if (r.deleted_edges) {
    json edges = json::array();
    for (const auto& e : *r.deleted_edges) edges.push_back({e.u, e.v});
    j["deleted_edges"] = edges;
  }
  return j.dump();
}

ResultRecord parse_record(const std::string& line) {
  try {
    const json j = json::parse(line);
    ResultRecord r;
    r.command = j.at("command").get<std::string>();
    r.what = j.at("what").get<std::string>();
    const json& input = j.at("input");
    r.input.family = input.at("family").get<std::string>();
    if (r.input.family == "file") {
      r.input.file = input.at("file").get<std::string>();
    } else {
      r.input.params = input.at("params").get<std::vector<int>>();
    }
    const json& params = j.at("params");
    r.budget_nodes = params.at("budget_nodes").get<std::uint64_t>();
    if (params.contains("k")) r.k = params["k"].get<int>();
    if (params.contains("t")) r.t = params["t"].get<int>();
    if (params.contains("cap")) r.cap = params["cap"].get<int>();
    r.value = j.at("value").get<int>();
    const auto status = bandred::parse_status(j.at("status").get<std::string>());
    if (!status) throw bandred::InvalidArgument("unknown status");
    r.status = *status;
    r.lower_bound = j.at("lower_bound").get<int>();
    r.nodes_expanded = j.at("nodes_expanded").get<std::uint64_t>();
    r.elapsed_us = j.at("elapsed_us").get<std::int64_t>();
    if (j.contains("witness")) r.witness = j["witness"].get<std::vector<int>>();
    if (j.contains("witness_board")) r.witness_board = j["witness_board"].get<std::string>();
    if (j.contains("deleted_edges")) {
      std::vector<bandred::Edge> edges;
      for (const auto& e : j["deleted_edges"]) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
      r.deleted_edges = std::move(edges);
    }
    return r;
  } catch (const json::exception& err) {
    throw bandred::InvalidArgument(std::string("malformed result record: ") + err.what());
  }
}

}  // namespace bandcli
