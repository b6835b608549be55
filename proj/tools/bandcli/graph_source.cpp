#include "graph_source.hpp"

#include <algorithm>
#include <charconv>

#include "bandred/edge_list.hpp"
#include "bandred/errors.hpp"
#include "bandred/generators.hpp"

namespace bandcli {

using bandred::InvalidArgument;

namespace {

int to_int(const std::string& token) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw InvalidArgument("expected an integer, got \"" + token + "\"");
  }
  return value;
}

std::size_t arity(const std::string& family) {
  if (family == "grid" || family == "bipartite") return 2;
  if (family == "double-wheel") return 0;
  return 1;
}

}  // namespace

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names{"grid",  "path",      "cycle",       "complete",
                                              "wheel", "bipartite", "double-wheel"};
  return names;
}

GraphSource GraphSource::parse(const std::vector<std::string>& tokens) {
  if (tokens.empty()) throw InvalidArgument("missing graph source");
  GraphSource source;
  source.family = tokens.front();
  if (source.family == "file") {
    if (tokens.size() != 2) throw InvalidArgument("usage: file <edge-list path>");
    source.file = tokens[1];
    return source;
  }
  const auto& names = family_names();
  if (std::find(names.begin(), names.end(), source.family) == names.end()) {
    throw InvalidArgument("unknown graph family \"" + source.family + "\"");
  }
  for (std::size_t i = 1; i < tokens.size(); ++i) source.params.push_back(to_int(tokens[i]));
  if (source.params.size() != arity(source.family)) {
    throw InvalidArgument(source.family + " takes " + std::to_string(arity(source.family)) +
                          " parameter(s)");
  }
  return source;
}

bandred::Graph GraphSource::build() const {
  using namespace bandred;
  if (family == "file") return read_edge_list_file(file);
  if (family == "grid") return grid(params.at(0), params.at(1));
  if (family == "path") return path(params.at(0));
  if (family == "cycle") return cycle(params.at(0));
  if (family == "complete") return complete(params.at(0));
  if (family == "wheel") return wheel(params.at(0));
  if (family == "bipartite") return complete_bipartite(params.at(0), params.at(1));
  if (family == "double-wheel") return double_wheel_axis();
  throw InvalidArgument("unknown graph family \"" + family + "\"");
}

std::string GraphSource::describe() const {
  if (family == "file") return "file " + file;
  std::string text = family;
  for (int p : params) text += " " + std::to_string(p);
  return text;
}

}  // namespace bandcli
