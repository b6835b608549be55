#include "bandred/edge_list.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "bandred/errors.hpp"

namespace bandred {

namespace {

// Next non-blank line, or false at end of input.
bool next_line(std::istream& in, std::string& line, int& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
  }
  return false;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  if (!next_line(in, line, line_no)) throw ParseError(line_no, "missing header \"v e\"");

  long long v = 0, e = 0;
  {
    std::istringstream header(line);
    std::string extra;
    if (!(header >> v >> e) || (header >> extra)) {
      throw ParseError(line_no, "header must be two integers \"v e\"");
    }
    if (v < 1 || e < 0) throw ParseError(line_no, "header needs v >= 1 and e >= 0");
    if (e > v * (v - 1) / 2) throw ParseError(line_no, "more edges than a simple graph allows");
  }

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(e));
  for (long long i = 0; i < e; ++i) {
    if (!next_line(in, line, line_no)) {
      throw ParseError(line_no, "expected " + std::to_string(e) + " edges, found " +
                                    std::to_string(i));
    }
    std::istringstream row(line);
    long long a = 0, b = 0;
    std::string extra;
    if (!(row >> a >> b) || (row >> extra)) throw ParseError(line_no, "edge must be \"u w\"");
    if (a < 1 || a > v || b < 1 || b > v) throw ParseError(line_no, "vertex id out of range");
    if (a == b) throw ParseError(line_no, "self-loop");
    edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
  }
  if (next_line(in, line, line_no)) throw ParseError(line_no, "trailing content after edges");

  try {
    return Graph(static_cast<int>(v), edges);
  } catch (const InvalidArgument& err) {
    throw ParseError(line_no, err.what());
  }
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

}  // namespace bandred
