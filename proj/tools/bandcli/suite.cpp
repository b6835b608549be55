#include "suite.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "bandred/bounds.hpp"
#include "bandred/constructions.hpp"
#include "bandred/evaluate.hpp"
#include "bandred/generators.hpp"
#include "bandred/solvers.hpp"

namespace bandcli {

using namespace bandred;

std::string_view to_string(CaseOutcome outcome) {
  switch (outcome) {
    case CaseOutcome::pass: return "PASS";
    case CaseOutcome::fail: return "FAIL";
    case CaseOutcome::unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

namespace {

std::string dims(int m, int n) { return std::to_string(m) + "x" + std::to_string(n); }

class SuiteBuilder {
 public:
  explicit SuiteBuilder(const SuiteOptions& options) : budget_(Budget::nodes(options.budget_nodes)) {}

  // Exact integer claim computed without search.
  void exact(std::string id, std::string claim, std::string source, int expected,
             const std::function<int()>& compute) {
    SuiteCase c{std::move(id), std::move(claim), std::move(source), std::to_string(expected), "", {}};
    const int actual = compute();
    c.actual = std::to_string(actual);
    c.outcome = actual == expected ? CaseOutcome::pass : CaseOutcome::fail;
    cases_.push_back(std::move(c));
  }

  // Claim whose value comes from a budgeted search.
  void searched(std::string id, std::string claim, std::string source, int expected,
                const std::function<SearchOutcome(const Budget&)>& compute) {
    SuiteCase c{std::move(id), std::move(claim), std::move(source), std::to_string(expected), "", {}};
    const SearchOutcome out = compute(budget_);
    if (out.status == Status::optimal) {
      c.actual = std::to_string(out.value);
      c.outcome = out.value == expected ? CaseOutcome::pass : CaseOutcome::fail;
    } else {
      c.actual = std::string(to_string(out.status)) + " [" + std::to_string(out.lower_bound) +
                 ", " + std::to_string(out.value) + "]";
      // A proven bracket that excludes the expected value is still a failure.
      const bool excluded = out.lower_bound > expected ||
                            (out.status == Status::upper_bound && out.value < expected);
      c.outcome = excluded ? CaseOutcome::fail : CaseOutcome::unknown;
    }
    cases_.push_back(std::move(c));
  }

  void check(std::string id, std::string claim, std::string source, std::string expected,
             const std::function<std::string()>& compute) {
    SuiteCase c{std::move(id), std::move(claim), std::move(source), std::move(expected), "", {}};
    c.actual = compute();
    c.outcome = c.actual == c.expected ? CaseOutcome::pass : CaseOutcome::fail;
    cases_.push_back(std::move(c));
  }

  std::vector<SuiteCase> take() { return std::move(cases_); }

 private:
  Budget budget_;
  std::vector<SuiteCase> cases_;
};

std::string lengths_of(const ConstructionReport& report) {
  std::vector<int> lengths;
  for (const auto& le : report.long_edges) lengths.push_back(le.length);
  std::sort(lengths.rbegin(), lengths.rend());
  std::string text;
  for (int l : lengths) text += (text.empty() ? "" : ",") + std::to_string(l);
  return text;
}

bool shares_endpoint(const ConstructionReport& report) {
  if (report.long_edges.size() != 2) return false;
  const Edge a = report.long_edges[0].edge, b = report.long_edges[1].edge;
  return std::set<int>{a.u, a.v, b.u, b.v}.size() == 3;
}

}  // namespace

std::vector<SuiteCase> run_suite(const SuiteOptions& options) {
  SuiteBuilder s(options);
  const int max_n = std::max(1, options.max_n);

  // Grid constructions.
  for (int n = 1; n <= max_n; ++n) {
    for (int m = std::max(n, 2); m <= max_n; ++m) {
      const auto id = dims(m, n);
      s.exact("ddl-bandwidth-" + id, "down-diagonal numbering of G_" + id + " has bandwidth n",
              "grid bandwidth", n, [=] {
                return bandwidth_of_numbering(grid(m, n), down_diagonal_lex(m, n).numbering);
              });
      s.exact("ddl-length-n-" + id, "down-diagonal numbering of G_" + id +
                                         " has 2(n-1)+n(m-n) edges of length n",
              "grid length count", 2 * (n - 1) + n * (m - n), [=] {
                const auto p = length_profile(grid(m, n), down_diagonal_lex(m, n).numbering);
                return p.counts.count(n) ? p.counts.at(n) : 0;
              });
      for (int k = 1; 2 * k < n; ++k) {
        s.exact("reduce-" + id + "-k" + std::to_string(k),
                "cut-and-flip numbering of G_" + id + " has m-n+2k edges longer than n-k",
                "cut-and-flip bound", m - n + 2 * k,
                [=] { return static_cast<int>(modified_board_numbering(m, n, k).long_edges.size()); });
      }
    }
  }
  s.check("reduce-board-G8-k2", "modified G_8 board for k=2 matches the reference board",
          "cut-and-flip example",
          "26 32 38 44 50 56 61 64|21 27 33 39 45 51 57 62|16 22 28 34 40 46 52 58|"
          "11 17 23 29 35 41 47 53 59 63|7 12 18 24 30 36 42 48 54 60|"
          "4 8 13 19 25 31 37 43 49 55|2 5 9 14 20|1 3 6 10 15|",
          [] {
            std::string text = board_text(modified_board(8, 8, 2).to_board());
            std::replace(text.begin(), text.end(), '\n', '|');
            return text;
          });

  for (int n = 3; n <= max_n; ++n) {
    const auto g = "G_" + std::to_string(n);
    s.check("two-edge-adjacent-" + std::to_string(n),
            "two long edges on " + g + " sharing a vertex, lengths 5n-7, 3n-4",
            "two-edge reduction",
            std::to_string(5 * n - 7) + "," + std::to_string(3 * n - 4) + " shared", [=] {
              const auto r = adjacent_reduction_numbering(n);
              return lengths_of(r) + (shares_endpoint(r) ? " shared" : " disjoint");
            });
    s.check("two-edge-nonadjacent-" + std::to_string(n),
            "two disjoint long edges on " + g + ", lengths 5n-8, 3n-5",
            "two-edge reduction",
            std::to_string(5 * n - 8) + "," + std::to_string(3 * n - 5) + " disjoint", [=] {
              const auto r = nonadjacent_reduction_numbering(n);
              return lengths_of(r) + (shares_endpoint(r) ? " shared" : " disjoint");
            });
  }
  s.check("two-edge-board-n6", "non-adjacent numbering of G_6 matches the reference board",
          "two-edge reduction",
          "33 29 25 30 34 36|11 16 21 26 31 35|7 12 17 22 27 32|4 8 13 18 23 28|"
          "2 5 9 14 19 24|1 3 6 10 15 20|",
          [] {
            std::string text = board_text(to_board(nonadjacent_reduction_numbering(6).grid));
            std::replace(text.begin(), text.end(), '\n', '|');
            return text;
          });

  // Searches on square grids.
  for (int n = 2; n <= max_n && n * n <= kMaxSearchVertices; ++n) {
    const auto g = "G_" + std::to_string(n);
    s.searched("grid-bandwidth-" + g, "bandwidth(" + g + ")=" + std::to_string(n), "grid bandwidth", n,
               [=](const Budget& b) { return exact_bandwidth(grid(n, n), b); });
  }
  s.searched("br-G2", "br_1(G_2)=1", "square grid exceptions", 1,
             [](const Budget& b) { return reduction_number(grid(2, 2), 1, b); });
  for (int n = 3; n <= max_n && n * n <= kMaxSearchVertices; ++n) {
    const auto g = "G_" + std::to_string(n);
    s.searched("two-edge-lower-" + g, "br_1(" + g + ")=2", "two-edge reduction", 2,
               [=](const Budget& b) {
                 return reduction_number(grid(n, n), 1, b,
                                         adjacent_reduction_numbering(n).grid.numbering);
               });
  }
  for (int n = 1; n <= max_n && n * n <= 20; ++n) {
    const auto g = "G_" + std::to_string(n);
    s.exact("vi-" + g, "vi(" + g + ")=" + std::to_string(n == 1 ? 0 : n),
            "isoperimetric remark", n == 1 ? 0 : n,
            [=] { return vertex_isoperimetric(grid(n, n)).value; });
  }
  if (max_n >= 4) {
    s.exact("vi-G4-minus-edge", "vi(G_4 - e)=3", "isoperimetric remark", 3, [] {
      const auto ex = vi_example_board();
      return vertex_isoperimetric(grid(4, 4).without_edges(std::vector{ex.removed})).value;
    });
  }

  // Small families.
  s.searched("path-bandwidth", "bandwidth(P_6)=1", "path, cycle and complete graphs", 1,
             [](const Budget& b) { return exact_bandwidth(path(6), b); });
  s.searched("cycle-bandwidth", "bandwidth(C_5)=2", "path, cycle and complete graphs", 2,
             [](const Budget& b) { return exact_bandwidth(cycle(5), b); });
  s.searched("cycle-reduction", "br_1(C_8)=1 by deletion", "path, cycle and complete graphs", 1,
             [](const Budget& b) { return reduction_by_deletion(cycle(8), 1, b); });
  s.searched("path-reduction", "br_1(P_5)=4 by deletion", "path, cycle and complete graphs", 4,
             [](const Budget& b) { return reduction_by_deletion(path(5), 1, b); });

  const int wheel_bw[] = {3, 3, 3, 3, 4, 4, 5, 5};
  const int wheel_br[] = {1, 1, 2, 3, 1, 2, 1, 2};
  for (int m = 4; m <= 11; ++m) {
    const auto w = "W_" + std::to_string(m);
    s.searched("wheel-bandwidth-" + w, "bandwidth(" + w + ")=" + std::to_string(wheel_bw[m - 4]),
               "wheel table", wheel_bw[m - 4],
               [=](const Budget& b) { return exact_bandwidth(wheel(m), b); });
    s.searched("wheel-reduction-" + w, "br_1(" + w + ")=" + std::to_string(wheel_br[m - 4]),
               "wheel table", wheel_br[m - 4],
               [=](const Budget& b) { return reduction_number(wheel(m), 1, b); });
  }

  for (int m = 1; m <= 7; ++m) {
    for (int n = 1; n <= m && m + n <= 8; ++n) {
      const auto name = "B_" + std::to_string(m) + "," + std::to_string(n);
      const int half = m / 2;
      int bw = m % 2 == 1 ? half + n : half + n - 1;
      int br = m % 2 == 1 ? 1 : 2;
      if (m == 2 && n == 2) bw = 2, br = 1;
      s.searched("bipartite-bandwidth-" + name, "bandwidth(" + name + ")=" + std::to_string(bw),
                 "complete bipartite table", bw,
                 [=](const Budget& b) { return exact_bandwidth(complete_bipartite(m, n), b); });
      s.searched("bipartite-reduction-" + name, "br_1(" + name + ")=" + std::to_string(br),
                 "complete bipartite table", br,
                 [=](const Budget& b) { return reduction_number(complete_bipartite(m, n), 1, b); });
    }
  }

  for (int n = 2; n <= 7; ++n) {
    for (int k = 1; k <= n - 1; ++k) {
      const auto id = "K_" + std::to_string(n) + "-k" + std::to_string(k);
      s.searched("complete-brk-" + id,
                 "min long edges of K_" + std::to_string(n) + " beyond " + std::to_string(n - 1 - k) +
                     " = k(k+1)/2",
                 "complete graph formula", brk_complete_formula(n, k),
                 [=](const Budget& b) { return min_long_edges(complete(n), n - 1 - k, b); });
    }
    s.exact("density-K_" + std::to_string(n), "density bound on K_" + std::to_string(n),
            "complete graph formula", n - 1, [=] { return density_lower_bound(complete(n)); });
    if (n >= 3) {
      s.exact("density-K_" + std::to_string(n) + "-minus-edge",
              "density bound on K_" + std::to_string(n) + " minus one edge", "complete graph formula",
              n - 2, [=] {
                const Graph g = complete(n);
                return density_lower_bound(g.without_edges(std::vector{g.edges().front()}));
              });
    }
  }

  s.exact("double-wheel-diameter-bound", "diameter bound of the double wheel = 5",
          "double wheel example", 5, [] { return diameter_lower_bound(double_wheel_axis()); });
  s.searched("double-wheel-split", "bandwidth(double wheel - axis)=3", "double wheel example", 3,
             [](const Budget& b) {
               return exact_bandwidth(
                   double_wheel_axis().without_edges(std::vector{double_wheel_axis_edge()}), b);
             });
  s.searched("double-wheel-br1", "br_1(double wheel)=1", "double wheel example", 1,
             [](const Budget& b) { return reduction_number(double_wheel_axis(), 1, b); });
  s.searched("double-wheel-br2", "br_2(double wheel)=1", "double wheel example", 1,
             [](const Budget& b) { return reduction_number(double_wheel_axis(), 2, b); });

  return s.take();
}

std::string format_case(const SuiteCase& c) {
  std::ostringstream out;
  out << to_string(c.outcome) << "  " << c.id << "  " << c.claim << "  expected=" << c.expected
      << " actual=" << c.actual << "  [" << c.source << "]";
  return out.str();
}

}  // namespace bandcli
