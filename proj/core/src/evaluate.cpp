#include "bandred/evaluate.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>
#include <string>

#include "bandred/errors.hpp"

namespace bandred {

namespace {

void check_sizes(const Graph& g, const Numbering& nu) {
  if (g.vertex_count() != nu.size()) {
    throw InvalidArgument("numbering has " + std::to_string(nu.size()) +
                          " labels but graph has " + std::to_string(g.vertex_count()) +
                          " vertices");
  }
}

template <typename F>
void for_each_length(const Graph& g, const Numbering& nu, F&& visit) {
  check_sizes(g, nu);
  for (int u = 1; u <= g.vertex_count(); ++u) {
    const int lu = nu.label(u);
    for (int w : g.neighbors(u)) {
      if (u < w) visit(std::abs(lu - nu.label(w)));
    }
  }
}

}  // namespace

int LengthProfile::total() const {
  int sum = 0;
  for (const auto& [length, count] : counts) sum += count;
  return sum;
}

int edge_length(const Graph& g, const Numbering& nu, Edge e) {
  check_sizes(g, nu);
  if (!g.has_edge(e.u, e.v)) {
    throw InvalidArgument("{" + std::to_string(e.u) + "," + std::to_string(e.v) +
                          "} is not an edge");
  }
  return std::abs(nu.label(e.u) - nu.label(e.v));
}

int bandwidth_of_numbering(const Graph& g, const Numbering& nu) {
  int best = 0;
  for_each_length(g, nu, [&](int length) { best = std::max(best, length); });
  return best;
}

int count_edges_longer_than(const Graph& g, const Numbering& nu, int t) {
  int count = 0;
  for_each_length(g, nu, [&](int length) { count += length > t ? 1 : 0; });
  return count;
}

LengthProfile length_profile(const Graph& g, const Numbering& nu) {
  LengthProfile profile;
  for_each_length(g, nu, [&](int length) {
    ++profile.counts[length];
    profile.max_length = std::max(profile.max_length, length);
  });
  return profile;
}

std::vector<int> boundary_profile(const Graph& g, const Numbering& nu) {
  check_sizes(g, nu);
  const int n = g.vertex_count();
  std::vector<int> profile(static_cast<std::size_t>(n) + 1, 0);
  // open[u]: neighbors of u still unlabelled after the current prefix
  std::vector<int> open(static_cast<std::size_t>(n) + 1, 0);
  int frontier = 0;
  for (int k = 1; k <= n; ++k) {
    const int x = nu.vertex_at(k);
    for (int w : g.neighbors(x)) {
      if (nu.label(w) < k) {
        if (--open[w] == 0) --frontier;
      } else {
        ++open[x];
      }
    }
    if (open[x] > 0) ++frontier;
    profile[k] = frontier;
  }
  return profile;
}

int isoperimetric_of_numbering(const Graph& g, const Numbering& nu) {
  const auto profile = boundary_profile(g, nu);
  return *std::max_element(profile.begin(), profile.end());
}

int diameter(const Graph& g) {
  const int n = g.vertex_count();
  int best = 0;
  std::vector<int> dist(static_cast<std::size_t>(n) + 1);
  for (int source = 1; source <= n; ++source) {
    std::fill(dist.begin(), dist.end(), -1);
    std::queue<int> frontier;
    dist[source] = 0;
    frontier.push(source);
    int reached = 1;
    while (!frontier.empty()) {
      const int u = frontier.front();
      frontier.pop();
      for (int w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          best = std::max(best, dist[w]);
          ++reached;
          frontier.push(w);
        }
      }
    }
    if (reached != n) throw DisconnectedGraph();
  }
  return best;
}

}  // namespace bandred
