#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "bandred/board.hpp"
#include "bandred/constructions.hpp"
#include "bandred/edge_list.hpp"
#include "bandred/errors.hpp"
#include "bandred/generators.hpp"
#include "bandred/solvers.hpp"
#include "graph_source.hpp"
#include "record.hpp"
#include "render.hpp"
#include "suite.hpp"

namespace bandcli {

using namespace bandred;

namespace {

struct Options {
  std::string family_or_kind;
  std::vector<std::string> params;
  std::optional<int> rows;
  std::optional<int> cols;
  std::optional<int> k;
  std::optional<int> t;
  int cap = 20;
  std::uint64_t budget_nodes = 100'000'000;
  std::optional<long long> time_limit_ms;
  std::string out;
  std::string format;
  std::string solve_target;
  std::optional<int> distance;
  int max_n = 4;
};

// Grid parameters may come from --cols/--rows instead of positionals.
std::vector<std::string> with_grid_flags(const Options& o) {
  std::vector<std::string> tokens{o.family_or_kind};
  tokens.insert(tokens.end(), o.params.begin(), o.params.end());
  if (o.family_or_kind == "grid" && o.params.empty() && o.cols && o.rows) {
    tokens.push_back(std::to_string(*o.cols));
    tokens.push_back(std::to_string(*o.rows));
  }
  return tokens;
}

std::vector<int> ints(const std::vector<std::string>& tokens, std::size_t expected,
                      const std::string& usage) {
  if (tokens.size() != expected) throw InvalidArgument("usage: " + usage);
  std::vector<int> values;
  for (const auto& t : tokens) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(t, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != t.size() || t.empty()) throw InvalidArgument("expected an integer, got \"" + t + "\"");
    values.push_back(v);
  }
  return values;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw InvalidArgument("cannot write " + path);
  file << text;
}

int cmd_gen(const Options& o, std::ostream& out) {
  const Graph g = GraphSource::parse(with_grid_flags(o)).build();
  emit(to_edge_list(g), o.out, out);
  return kExitOk;
}

int cmd_numbering(const Options& o, std::ostream& out) {
  const std::string& kind = o.family_or_kind;
  std::vector<std::string> params = o.params;
  if (params.empty() && o.cols && o.rows) {
    params = {std::to_string(*o.cols), std::to_string(*o.rows)};
    if (o.k) params.push_back(std::to_string(*o.k));
  }

  ConstructionReport report;
  std::optional<StaircaseBoard> staircase;
  if (kind == "ddl") {
    const auto p = ints(params, 2, "numbering ddl <m> <n>");
    report = report_long_edges(down_diagonal_lex(p[0], p[1]), p[1] - 1);
  } else if (kind == "reduce") {
    if (params.size() == 2 && o.k) params.push_back(std::to_string(*o.k));
    const auto p = ints(params, 3, "numbering reduce <m> <n> <k>");
    report = modified_board_numbering(p[0], p[1], p[2]);
    staircase = modified_board(p[0], p[1], p[2]);
  } else if (kind == "adjacent") {
    const auto p = ints(params, 1, "numbering adjacent <n>");
    report = adjacent_reduction_numbering(p[0]);
    staircase = modified_board(p[0], p[0], 1);
  } else if (kind == "nonadjacent") {
    const auto p = ints(params, 1, "numbering nonadjacent <n>");
    report = nonadjacent_reduction_numbering(p[0]);
  } else if (kind == "vi-example") {
    ints(params, 0, "numbering vi-example");
    const auto example = vi_example_board();
    report = report_long_edges(example.grid, 3);
    out << "# removed-edge " << example.removed.u << ' ' << example.removed.v << '\n';
  } else {
    throw InvalidArgument("unknown numbering kind \"" + kind +
                          "\" (ddl, reduce, adjacent, nonadjacent, vi-example)");
  }

  const std::string format = o.format.empty() ? "board" : o.format;
  std::string text;
  if (format == "board") {
    text = board_text(to_board(report.grid));
  } else if (format == "staircase") {
    if (!staircase) throw InvalidArgument("--format staircase applies to reduce and adjacent");
    text = board_text(staircase->to_board());
  } else if (format == "ascii") {
    text = render_ascii(to_board(report.grid));
  } else {
    throw InvalidArgument("unknown numbering format \"" + format + "\" (board, staircase, ascii)");
  }
  emit(text, o.out, out);

  out << "# grid " << report.grid.cols << ' ' << report.grid.rows << '\n'
      << "# threshold " << report.threshold << '\n'
      << "# long-edges " << report.long_edges.size() << '\n';
  for (const auto& le : report.long_edges) {
    const auto a = grid_cell(report.grid.cols, le.edge.u);
    const auto b = grid_cell(report.grid.cols, le.edge.v);
    out << "# long (" << a.row << ',' << a.col << ")-(" << b.row << ',' << b.col << ") length "
        << le.length << '\n';
  }
  return kExitOk;
}

int cmd_solve(const Options& o, std::ostream& out) {
  const GraphSource source = GraphSource::parse(with_grid_flags(o));
  const Graph g = source.build();
  Budget budget = Budget::nodes(o.budget_nodes);
  if (o.time_limit_ms) budget.wall_clock = std::chrono::milliseconds(*o.time_limit_ms);

  ResultRecord record;
  record.what = o.solve_target;
  record.input = source;
  record.budget_nodes = o.budget_nodes;

  // Grid construction seeds the reduction search when it applies.
  const auto grid_incumbent = [&](int k) -> std::optional<Numbering> {
    if (!source.is_grid()) return std::nullopt;
    const int m = source.params[0], n = source.params[1];
    if (m >= n && n > 2 * k && k >= 1) return modified_board_numbering(m, n, k).grid.numbering;
    return std::nullopt;
  };

  SearchOutcome outcome;
  const std::string& what = o.solve_target;
  if (what == "bandwidth") {
    outcome = exact_bandwidth(g, budget);
  } else if (what == "brk") {
    record.k = o.k.value_or(1);
    outcome = reduction_number(g, *record.k, budget, grid_incumbent(*record.k));
  } else if (what == "deletion") {
    record.k = o.k.value_or(1);
    outcome = reduction_by_deletion(g, *record.k, budget);
  } else if (what == "mle") {
    if (!o.t) throw InvalidArgument("solve mle needs --t");
    record.t = *o.t;
    outcome = min_long_edges(g, *o.t, budget);
  } else if (what == "vi") {
    record.cap = o.cap;
    outcome = vertex_isoperimetric(g, o.cap);
  } else {
    throw InvalidArgument("unknown solve target \"" + what + "\" (bandwidth, brk, deletion, mle, vi)");
  }

  record.value = outcome.value;
  record.status = outcome.status;
  record.lower_bound = outcome.lower_bound;
  record.nodes_expanded = outcome.nodes_expanded;
  record.elapsed_us = outcome.elapsed.count();
  if (outcome.witness) {
    const auto labels = outcome.witness->labels();
    record.witness = std::vector<int>(labels.begin(), labels.end());
    if (source.is_grid()) {
      record.witness_board =
          board_text(to_board(GridNumbering{source.params[0], source.params[1], *outcome.witness}));
    }
  }
  record.deleted_edges = outcome.deleted_edges;

  const std::string line = to_json_line(record);
  out << line << '\n';
  if (!o.out.empty()) {
    std::ofstream log(o.out, std::ios::app);
    if (!log) throw InvalidArgument("cannot append to " + o.out);
    log << line << '\n';
  }
  return outcome.status == Status::optimal ? kExitOk : kExitUnknown;
}

int cmd_render(const Options& o, std::ostream& out) {
  if (o.params.size() != 1) throw InvalidArgument("usage: render <board-file>");
  const LabelBoard board = read_board_file(o.params[0]);
  const std::string format = o.format.empty() ? "ascii" : o.format;
  if (format == "ascii") {
    out << render_ascii(board);
    return kExitOk;
  }
  if (format != "band") throw InvalidArgument("unknown render format \"" + format + "\" (ascii, band)");
  const GridNumbering grid = to_grid_numbering(board);
  const int distance = o.distance.value_or(std::min(grid.rows, grid.cols));
  out << render_band(bandred::grid(grid.cols, grid.rows), grid.numbering, distance);
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto cases = run_suite(SuiteOptions{o.max_n, o.budget_nodes});
  int passed = 0, failed = 0, unknown = 0;
  for (const auto& c : cases) {
    out << format_case(c) << '\n';
    switch (c.outcome) {
      case CaseOutcome::pass: ++passed; break;
      case CaseOutcome::fail: ++failed; break;
      case CaseOutcome::unknown: ++unknown; break;
    }
  }
  out << "summary: " << passed << " passed, " << failed << " failed, " << unknown << " unknown\n";
  if (failed > 0) return kExitInvalid;
  return unknown > 0 ? kExitUnknown : kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact bandwidth and bandwidth-reduction toolkit for grids and small graphs",
               "bandcli"};
  app.require_subcommand(1);
  Options o;

  auto* gen = app.add_subcommand("gen", "Write a graph family as an edge list");
  gen->add_option("family", o.family_or_kind,
                  "grid | path | cycle | complete | wheel | bipartite | double-wheel")
      ->required();
  gen->add_option("params", o.params, "Family parameters (grid: m n, i.e. columns rows)");
  gen->add_option("--rows", o.rows, "Grid rows n");
  gen->add_option("--cols", o.cols, "Grid columns m");
  gen->add_option("--out", o.out, "Output file (default stdout)");

  auto* numbering = app.add_subcommand("numbering", "Build a constructed grid numbering");
  numbering->add_option("kind", o.family_or_kind, "ddl | reduce | adjacent | nonadjacent | vi-example")
      ->required();
  numbering->add_option("params", o.params, "ddl: m n; reduce: m n k; adjacent/nonadjacent: n");
  numbering->add_option("--rows", o.rows, "Grid rows n");
  numbering->add_option("--cols", o.cols, "Grid columns m");
  numbering->add_option("--k", o.k, "Reduction amount for reduce");
  numbering->add_option("--format", o.format, "board (default) | staircase | ascii");
  numbering->add_option("--out", o.out, "Board output file (report still goes to stdout)");

  auto* solve = app.add_subcommand("solve", "Run an exact solver and print a result record");
  solve->add_option("what", o.solve_target, "bandwidth | brk | deletion | mle | vi")->required();
  solve->add_option("source", o.params, "Graph source, e.g. grid 3 3 or file g.txt")->required();
  solve->add_option("--rows", o.rows, "Grid rows n");
  solve->add_option("--cols", o.cols, "Grid columns m");
  solve->add_option("--k", o.k, "Reduction amount for brk/deletion (default 1)");
  solve->add_option("--t", o.t, "Length threshold for mle");
  solve->add_option("--cap", o.cap, "Vertex cap for vi (default 20)");
  solve->add_option("--budget-nodes", o.budget_nodes, "Search node budget");
  solve->add_option("--time-limit-ms", o.time_limit_ms, "Wall-clock limit");
  solve->add_option("--out", o.out, "Append the record to this file");

  auto* render = app.add_subcommand("render", "Render a board file");
  render->add_option("board", o.params, "Board file (top row first)")->required();
  render->add_option("--format", o.format, "ascii (default) | band");
  render->add_option("--distance", o.distance, "Band distance (default: smaller grid side)");

  auto* verify = app.add_subcommand("verify", "Run the claim verification suite");
  verify->add_option("--max-n", o.max_n, "Largest grid side to sweep");
  verify->add_option("--budget-nodes", o.budget_nodes, "Node budget per solver call");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (gen->parsed()) return cmd_gen(o, out);
    if (numbering->parsed()) return cmd_numbering(o, out);
    if (solve->parsed()) {
      // first source token is the family, the rest its parameters
      o.family_or_kind = o.params.front();
      o.params.erase(o.params.begin());
      return cmd_solve(o, out);
    }
    if (render->parsed()) return cmd_render(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const DisconnectedGraph& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitInvalid;
}

}  // namespace bandcli
