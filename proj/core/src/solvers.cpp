#include "bandred/solvers.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "bandred/bounds.hpp"
#include "bandred/errors.hpp"
#include "bandred/evaluate.hpp"
#include "label_search.hpp"

namespace bandred {

using detail::LabelSearch;
using detail::SearchMeter;

std::string_view to_string(Status status) {
  switch (status) {
    case Status::optimal: return "optimal";
    case Status::upper_bound: return "upper_bound";
    case Status::unknown: return "unknown";
  }
  return "unknown";
}

std::optional<Status> parse_status(std::string_view text) {
  if (text == "optimal") return Status::optimal;
  if (text == "upper_bound") return Status::upper_bound;
  if (text == "unknown") return Status::unknown;
  return std::nullopt;
}

std::string_view to_string(Decision decision) {
  switch (decision) {
    case Decision::yes: return "yes";
    case Decision::no: return "no";
    case Decision::unknown: return "unknown";
  }
  return "unknown";
}

namespace {

void check_searchable(const Graph& g) {
  if (g.vertex_count() > kMaxSearchVertices) {
    throw InvalidArgument("exact search supports at most " +
                          std::to_string(kMaxSearchVertices) + " vertices");
  }
}

void finish(SearchOutcome& outcome, const SearchMeter& meter) {
  outcome.nodes_expanded = meter.nodes();
  outcome.elapsed = meter.elapsed();
}

// Decision with an existing meter; fills `witness` on yes.
Decision decide(const Graph& g, int b, SearchMeter& meter, std::optional<Numbering>* witness) {
  const int n = g.vertex_count();
  if (g.edge_count() == 0 || b >= n - 1) {
    if (witness) *witness = Numbering::identity(n);
    return Decision::yes;
  }
  if (b == 0) return Decision::no;
  LabelSearch search(g, b, meter);
  auto found = search.find(0);
  if (found) {
    if (witness) *witness = Numbering::from_order(std::move(found->order));
    return Decision::yes;
  }
  return meter.exhausted() ? Decision::unknown : Decision::no;
}

int search_lower_bound(const Graph& g) {
  if (g.edge_count() == 0) return 0;
  return std::max({1, component_diameter_lower_bound(g), density_lower_bound(g)});
}

SearchOutcome bandwidth_with_meter(const Graph& g, SearchMeter& meter) {
  SearchOutcome outcome;
  const Numbering identity = Numbering::identity(g.vertex_count());
  outcome.witness = identity;
  outcome.value = bandwidth_of_numbering(g, identity);
  outcome.lower_bound = std::min(search_lower_bound(g), outcome.value);

  for (int b = outcome.lower_bound; b < outcome.value; ++b) {
    std::optional<Numbering> witness;
    const Decision d = decide(g, b, meter, &witness);
    if (d == Decision::yes) {
      outcome.value = b;
      outcome.witness = std::move(witness);
      break;
    }
    if (d == Decision::unknown) {
      outcome.status = Status::unknown;
      return outcome;
    }
    outcome.lower_bound = b + 1;
  }
  outcome.lower_bound = outcome.value;
  outcome.status = Status::optimal;
  return outcome;
}

SearchOutcome long_edges_with_meter(const Graph& g, int t, SearchMeter& meter,
                                    std::optional<Numbering> incumbent) {
  const int n = g.vertex_count();
  SearchOutcome outcome;
  Numbering best = incumbent ? std::move(*incumbent) : Numbering::identity(n);
  outcome.value = count_edges_longer_than(g, best, t);
  outcome.witness = best;
  if (outcome.value == 0 || t >= n - 1) {
    outcome.status = Status::optimal;
    return outcome;
  }

  LabelSearch search(g, t, meter);
  while (outcome.value > outcome.lower_bound) {
    auto found = search.find(outcome.value - 1);
    if (found) {
      outcome.witness = Numbering::from_order(std::move(found->order));
      outcome.value = found->long_edges;
      continue;
    }
    if (meter.exhausted()) {
      outcome.status = Status::upper_bound;
      return outcome;
    }
    outcome.lower_bound = outcome.value;
  }
  outcome.status = Status::optimal;
  return outcome;
}

// Bandwidth for the reduction operations; throws when reduction is undefined.
std::optional<int> reducible_bandwidth(const Graph& g, int k, SearchMeter& meter,
                                       SearchOutcome& outcome) {
  if (k < 1) throw InvalidArgument("k must be at least 1");
  SearchOutcome b = bandwidth_with_meter(g, meter);
  if (b.status != Status::optimal) {
    // Deleting every edge always works, so |E| is the fallback upper bound.
    outcome.status = Status::unknown;
    outcome.value = g.edge_count();
    return std::nullopt;
  }
  if (b.value == 0) throw InvalidArgument("bandwidth cannot be reduced: graph has bandwidth 0");
  if (k > b.value) {
    throw InvalidArgument("k=" + std::to_string(k) + " exceeds the bandwidth " +
                          std::to_string(b.value));
  }
  return b.value;
}

}  // namespace

Decision bandwidth_decision(const Graph& g, int b, const Budget& budget) {
  if (b < 0) throw InvalidArgument("bandwidth bound must be nonnegative");
  check_searchable(g);
  SearchMeter meter(budget);
  return decide(g, b, meter, nullptr);
}

SearchOutcome exact_bandwidth(const Graph& g, const Budget& budget) {
  check_searchable(g);
  SearchMeter meter(budget);
  SearchOutcome outcome = bandwidth_with_meter(g, meter);
  finish(outcome, meter);
  return outcome;
}

SearchOutcome min_long_edges(const Graph& g, int t, const Budget& budget,
                             std::optional<Numbering> incumbent) {
  if (t < 0) throw InvalidArgument("length threshold must be nonnegative");
  check_searchable(g);
  if (incumbent && incumbent->size() != g.vertex_count()) {
    throw InvalidArgument("incumbent numbering has the wrong size");
  }
  SearchMeter meter(budget);
  SearchOutcome outcome = long_edges_with_meter(g, t, meter, std::move(incumbent));
  finish(outcome, meter);
  return outcome;
}

SearchOutcome reduction_number(const Graph& g, int k, const Budget& budget,
                               std::optional<Numbering> incumbent) {
  check_searchable(g);
  if (incumbent && incumbent->size() != g.vertex_count()) {
    throw InvalidArgument("incumbent numbering has the wrong size");
  }
  SearchMeter meter(budget);
  SearchOutcome outcome;
  const auto b = reducible_bandwidth(g, k, meter, outcome);
  if (b) outcome = long_edges_with_meter(g, *b - k, meter, std::move(incumbent));
  finish(outcome, meter);
  return outcome;
}

SearchOutcome reduction_by_deletion(const Graph& g, int k, const Budget& budget) {
  check_searchable(g);
  SearchMeter meter(budget);
  SearchOutcome outcome;
  const auto b = reducible_bandwidth(g, k, meter, outcome);
  if (!b) {
    finish(outcome, meter);
    return outcome;
  }
  const int target = *b - k;
  const std::vector<Edge> all = g.edges();
  const int e = static_cast<int>(all.size());

  // Subsets of size f in lexicographic index order.
  for (int f = 1; f <= e; ++f) {
    outcome.lower_bound = f;
    std::vector<int> pick(static_cast<std::size_t>(f));
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      std::vector<Edge> removed;
      for (int i : pick) removed.push_back(all[static_cast<std::size_t>(i)]);
      const Graph h = g.without_edges(removed);
      if (search_lower_bound(h) <= target) {
        std::optional<Numbering> witness;
        const Decision d = decide(h, target, meter, &witness);
        if (d == Decision::yes) {
          outcome.value = f;
          outcome.status = Status::optimal;
          outcome.witness = std::move(witness);
          outcome.deleted_edges = std::move(removed);
          finish(outcome, meter);
          return outcome;
        }
        if (d == Decision::unknown) {
          outcome.value = f;
          outcome.status = Status::unknown;
          finish(outcome, meter);
          return outcome;
        }
      }
      int i = f - 1;
      while (i >= 0 && pick[static_cast<std::size_t>(i)] == e - f + i) --i;
      if (i < 0) break;
      ++pick[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < f; ++j) pick[static_cast<std::size_t>(j)] = pick[j - 1] + 1;
    }
  }
  // Deleting every edge always reaches bandwidth 0 <= target.
  throw InvalidArgument("deletion search exhausted all edge sets");
}

SearchOutcome vertex_isoperimetric(const Graph& g, int cap) {
  constexpr int kHardCap = 30;
  const int n = g.vertex_count();
  if (cap < 1) throw InvalidArgument("vertex cap must be positive");
  if (n > cap || n > kHardCap) {
    throw InvalidArgument("subset DP limited to " + std::to_string(std::min(cap, kHardCap)) +
                          " vertices, graph has " + std::to_string(n));
  }
  const auto start = std::chrono::steady_clock::now();
  using Mask = std::uint32_t;
  std::vector<Mask> adjacency(static_cast<std::size_t>(n), 0);
  for (int u = 1; u <= n; ++u) {
    for (int w : g.neighbors(u)) adjacency[u - 1] |= Mask{1} << (w - 1);
  }

  const Mask full = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
  std::vector<std::uint8_t> best(std::size_t{1} << n, 0);
  for (Mask s = 1; s != 0 && s <= full; ++s) {
    int boundary = 0;
    int cheapest = 255;
    for (Mask rest = s; rest != 0; rest &= rest - 1) {
      const int u = std::countr_zero(rest);
      if ((adjacency[u] & ~s) != 0) ++boundary;
      cheapest = std::min<int>(cheapest, best[s & ~(Mask{1} << u)]);
    }
    best[s] = static_cast<std::uint8_t>(std::max(boundary, cheapest));
    if (s == full) break;
  }

  // Peel off vertices from the full set to recover an optimal ordering.
  std::vector<int> order(static_cast<std::size_t>(n));
  Mask s = full;
  for (int pos = n; pos >= 1; --pos) {
    int pick = -1;
    for (Mask rest = s; rest != 0; rest &= rest - 1) {
      const int u = std::countr_zero(rest);
      if (pick < 0 || best[s & ~(Mask{1} << u)] < best[s & ~(Mask{1} << pick)]) pick = u;
    }
    order[static_cast<std::size_t>(pos - 1)] = pick + 1;
    s &= ~(Mask{1} << pick);
  }

  SearchOutcome outcome;
  outcome.value = best[full];
  outcome.lower_bound = outcome.value;
  outcome.status = Status::optimal;
  outcome.witness = Numbering::from_order(std::move(order));
  outcome.nodes_expanded = std::uint64_t{1} << n;
  outcome.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
      std::chrono::steady_clock::now() - start);
  return outcome;
}

}  // namespace bandred
