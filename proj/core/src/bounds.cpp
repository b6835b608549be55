#include "bandred/bounds.hpp"

#include <algorithm>
#include <queue>
#include <string>
#include <vector>

#include "bandred/errors.hpp"
#include "bandred/evaluate.hpp"

namespace bandred {

namespace {

int ceil_div(int a, int b) { return (a + b - 1) / b; }

}  // namespace

int diameter_lower_bound(const Graph& g) {
  if (g.vertex_count() < 2) throw InvalidArgument("diameter bound needs at least two vertices");
  return ceil_div(g.vertex_count() - 1, diameter(g));
}

int density_lower_bound(const Graph& g) {
  const long long v = g.vertex_count();
  const long long e = g.edge_count();
  for (long long k = 1; k <= v - 1; ++k) {
    if (e > v * (v - 1) / 2 - k * (k + 1) / 2) return static_cast<int>(v - k);
  }
  return 0;
}

int component_diameter_lower_bound(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> component(static_cast<std::size_t>(n) + 1, 0);
  int best = 0;
  for (int start = 1; start <= n; ++start) {
    if (component[start] != 0) continue;
    component[start] = start;
    std::vector<int> members{start};
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (int w : g.neighbors(members[i])) {
        if (component[w] == 0) {
          component[w] = start;
          members.push_back(w);
        }
      }
    }
    if (members.size() < 2) continue;
    std::sort(members.begin(), members.end());
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
      if (component[e.u] == start) {
        const auto a = std::lower_bound(members.begin(), members.end(), e.u) - members.begin();
        const auto b = std::lower_bound(members.begin(), members.end(), e.v) - members.begin();
        edges.emplace_back(static_cast<int>(a) + 1, static_cast<int>(b) + 1);
      }
    }
    best = std::max(best, diameter_lower_bound(Graph(static_cast<int>(members.size()), edges)));
  }
  return best;
}

int brk_complete_formula(int n, int k) {
  if (k < 1 || k > n - 1) {
    throw InvalidArgument("br_k(K_n) needs 1 <= k <= n-1 (got n=" + std::to_string(n) +
                          ", k=" + std::to_string(k) + ")");
  }
  return k * (k + 1) / 2;
}

}  // namespace bandred
