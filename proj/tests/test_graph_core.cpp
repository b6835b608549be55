#include <algorithm>
#include <cstdlib>
#include <random>
#include <sstream>

#include "bandred/edge_list.hpp"
#include "bandred/errors.hpp"
#include "bandred/evaluate.hpp"
#include "bandred/generators.hpp"
#include "doctest.h"

using namespace bandred;

namespace {

// Lattice edges of an n-row, m-column board counted from coordinates.
int lattice_edge_count(int m, int n) {
  int count = 0;
  for (int a = 0; a < m * n; ++a) {
    for (int b = a + 1; b < m * n; ++b) {
      const int dr = std::abs(a / m - b / m);
      const int dc = std::abs(a % m - b % m);
      count += dr + dc == 1 ? 1 : 0;
    }
  }
  return count;
}

Numbering shuffled(int n, std::mt19937& rng) {
  std::vector<int> labels(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) labels[i] = i + 1;
  std::shuffle(labels.begin(), labels.end(), rng);
  return Numbering::from_labels(std::move(labels));
}

std::vector<Graph> small_family() {
  return {path(1), path(6), cycle(5), complete(6), wheel(7), complete_bipartite(3, 2),
          grid(5, 3), grid(4, 4), double_wheel_axis()};
}

}  // namespace

TEST_CASE("graph rejects loops, duplicates and bad ids") {
  CHECK_THROWS_AS(Graph(3, std::vector<Edge>{{1, 1}}), InvalidArgument);
  CHECK_THROWS_AS(Graph(3, std::vector<Edge>{{1, 2}, {2, 1}}), InvalidArgument);
  CHECK_THROWS_AS(Graph(3, std::vector<Edge>{{1, 4}}), InvalidArgument);
  CHECK_THROWS_AS(Graph(0), InvalidArgument);
}

TEST_CASE("adjacency is symmetric and edge count is half the degree sum") {
  for (const Graph& g : small_family()) {
    int degree_sum = 0;
    for (int u = 1; u <= g.vertex_count(); ++u) {
      degree_sum += g.degree(u);
      for (int w : g.neighbors(u)) CHECK(g.has_edge(w, u));
    }
    CHECK(degree_sum == 2 * g.edge_count());
  }
}

TEST_CASE("grid generator") {
  const Graph single = grid(1, 1);
  CHECK(single.vertex_count() == 1);
  CHECK(single.edge_count() == 0);

  const Graph square = grid(2, 2);
  CHECK(square.vertex_count() == 4);
  CHECK(square.edge_count() == 4);
  for (int u = 1; u <= 4; ++u) CHECK(square.degree(u) == 2);  // C_4

  const Graph g53 = grid(5, 3);
  CHECK(g53.vertex_count() == 15);
  CHECK(g53.edge_count() == lattice_edge_count(5, 3));
  CHECK(g53.edge_count() == 22);

  for (int n = 1; n <= 12; ++n) {
    for (int m = n; m <= 12; ++m) CHECK(grid(m, n).edge_count() == 2 * m * n - m - n);
  }
  CHECK_THROWS_AS(grid(0, 3), InvalidArgument);
}

TEST_CASE("grid coordinates") {
  CHECK(grid_vertex(5, {1, 1}) == 1);
  CHECK(grid_vertex(5, {2, 1}) == 6);
  for (int id = 1; id <= 15; ++id) CHECK(grid_vertex(5, grid_cell(5, id)) == id);
  const Graph g = grid(5, 3);
  CHECK(g.has_edge(grid_vertex(5, {1, 1}), grid_vertex(5, {1, 2})));
  CHECK(g.has_edge(grid_vertex(5, {1, 1}), grid_vertex(5, {2, 1})));
  CHECK_FALSE(g.has_edge(grid_vertex(5, {1, 5}), grid_vertex(5, {2, 1})));
}

TEST_CASE("standard families") {
  CHECK(wheel(7).vertex_count() == 7);
  CHECK(wheel(7).edge_count() == 12);
  CHECK(complete_bipartite(2, 2).edge_count() == 4);
  CHECK(complete(5).edge_count() == 10);
  CHECK(cycle(8).edge_count() == 8);
  const Graph dw = double_wheel_axis();
  CHECK(dw.vertex_count() == 14);
  CHECK(dw.edge_count() == 25);
  CHECK(diameter(dw) == 3);

  CHECK_THROWS_AS(wheel(3), InvalidArgument);
  CHECK_THROWS_AS(cycle(2), InvalidArgument);
  CHECK_THROWS_AS(complete_bipartite(1, 2), InvalidArgument);
  CHECK_THROWS_AS(path(0), InvalidArgument);
}

TEST_CASE("edge length") {
  const Graph p = path(5);
  const Numbering id = Numbering::identity(5);
  CHECK(edge_length(p, id, {2, 3}) == 1);
  CHECK_THROWS_AS(edge_length(p, id, {1, 3}), InvalidArgument);
}

TEST_CASE("bandwidth of a numbering") {
  CHECK(bandwidth_of_numbering(grid(1, 1), Numbering::identity(1)) == 0);
  CHECK(bandwidth_of_numbering(path(4), Numbering::identity(4)) == 1);
  CHECK_THROWS_AS(bandwidth_of_numbering(path(4), Numbering::identity(5)), InvalidArgument);
}

TEST_CASE("count of long edges") {
  const Graph g = grid(4, 3);
  const Numbering id = Numbering::identity(12);
  CHECK(count_edges_longer_than(g, id, 11) == 0);
  CHECK(count_edges_longer_than(g, id, 0) == g.edge_count());
  CHECK(count_edges_longer_than(g, id, 4) == 0);
  CHECK(count_edges_longer_than(g, id, 3) == 8);  // the vertical edges, length 4
  CHECK(count_edges_longer_than(g, id, 1) == 8);
  CHECK(count_edges_longer_than(g, id, 0) == 17);
}

TEST_CASE("length profiles") {
  std::mt19937 rng(7);
  const Graph k4 = complete(4);
  for (int trial = 0; trial < 5; ++trial) {
    const LengthProfile profile = length_profile(k4, shuffled(4, rng));
    CHECK(profile.counts == std::map<int, int>{{1, 3}, {2, 2}, {3, 1}});
    CHECK(profile.max_length == 3);
  }
  CHECK(length_profile(path(3), Numbering::identity(3)).counts == std::map<int, int>{{1, 2}});

  // C_4 as grid(2,2): cycle order is (1,1) (1,2) (2,2) (2,1) = ids 1 2 4 3.
  const Graph square = grid(2, 2);
  const Numbering nu = Numbering::from_labels({1, 2, 3, 4});  // labels 1,2,4,3 around the cycle
  std::map<int, int> expected;
  for (const Edge& e : square.edges()) ++expected[std::abs(nu.label(e.u) - nu.label(e.v))];
  CHECK(length_profile(square, nu).counts == expected);
  CHECK(expected == std::map<int, int>{{1, 2}, {2, 2}});

  CHECK(length_profile(grid(1, 1), Numbering::identity(1)).max_length == 0);
}

TEST_CASE("numbering evaluators agree on random numberings") {
  std::mt19937 rng(20240611);
  for (const Graph& g : small_family()) {
    const int n = g.vertex_count();
    for (int trial = 0; trial < 20; ++trial) {
      const Numbering nu = shuffled(n, rng);
      const LengthProfile profile = length_profile(g, nu);
      const int b = bandwidth_of_numbering(g, nu);
      CHECK(profile.max_length == b);
      CHECK(profile.total() == g.edge_count());
      CHECK(bandwidth_of_numbering(g, nu.reversed()) == b);
      int previous = g.edge_count();
      for (int t = 0; t <= n; ++t) {
        const int c = count_edges_longer_than(g, nu, t);
        CHECK(c <= previous);
        previous = c;
      }
      CHECK(count_edges_longer_than(g, nu, b) == 0);
      const auto boundary = boundary_profile(g, nu);
      REQUIRE(boundary.size() == static_cast<std::size_t>(n) + 1);
      CHECK(boundary.front() == 0);
      CHECK(boundary.back() == 0);
      for (int k = 0; k <= n; ++k) {
        // direct count, and the bound by k and by the degree mass outside the prefix
        int direct = 0, outside_degree = 0;
        for (int u = 1; u <= n; ++u) {
          if (nu.label(u) > k) {
            outside_degree += g.degree(u);
            continue;
          }
          for (int w : g.neighbors(u)) {
            if (nu.label(w) > k) {
              ++direct;
              break;
            }
          }
        }
        CHECK(boundary[k] == direct);
        CHECK(boundary[k] <= std::min(k, outside_degree));
      }
    }
  }
  for (int n = 2; n <= 8; ++n) {
    for (int trial = 0; trial < 4; ++trial) {
      const auto profile = length_profile(complete(n), shuffled(n, rng));
      for (int d = 1; d < n; ++d) CHECK(profile.counts.at(d) == n - d);
    }
  }
}

TEST_CASE("boundary profile") {
  const auto profile = boundary_profile(path(4), Numbering::identity(4));
  CHECK(*std::max_element(profile.begin(), profile.end()) == 1);
  CHECK(isoperimetric_of_numbering(path(4), Numbering::identity(4)) == 1);
}

TEST_CASE("diameter") {
  CHECK(diameter(complete(5)) == 1);
  CHECK(diameter(grid(5, 3)) == 6);
  CHECK(diameter(grid(1, 1)) == 0);
  CHECK_THROWS_AS(diameter(Graph(3)), DisconnectedGraph);
  const Graph split = double_wheel_axis().without_edges(std::vector{double_wheel_axis_edge()});
  CHECK_FALSE(split.is_connected());
  CHECK_THROWS_AS(diameter(split), DisconnectedGraph);
}

TEST_CASE("edge list round trip and errors") {
  for (const Graph& g : small_family()) {
    std::istringstream in(to_edge_list(g));
    CHECK(read_edge_list(in) == g);
  }
  CHECK(to_edge_list(grid(5, 3)).rfind("15 22\n", 0) == 0);
  CHECK(to_edge_list(path(1)) == "1 0\n");

  const auto parse = [](const char* text) {
    std::istringstream in(text);
    return read_edge_list(in);
  };
  CHECK(parse("3 2\n1 2\n\n2 3\n").edge_count() == 2);
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("3 2\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse("3 1\n1 1\n"), ParseError);
  CHECK_THROWS_AS(parse("3 1\n1 4\n"), ParseError);
  CHECK_THROWS_AS(parse("3 2\n1 2\n2 1\n"), ParseError);
  CHECK_THROWS_AS(parse("3 1\n1 2\n2 3\n"), ParseError);
  CHECK_THROWS_AS(parse("3 1\n1 x\n"), ParseError);
}
