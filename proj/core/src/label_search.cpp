#include "label_search.hpp"

#include <algorithm>
#include <bit>

#include "bandred/errors.hpp"

namespace bandred::detail {

SearchMeter::SearchMeter(const Budget& budget)
    : budget_(budget), start_(std::chrono::steady_clock::now()) {}

bool SearchMeter::tick() {
  if (exhausted_) return false;
  if (nodes_ >= budget_.max_nodes) {
    exhausted_ = true;
    return false;
  }
  ++nodes_;
  if (budget_.wall_clock && (nodes_ & 0x3ff) == 0 &&
      std::chrono::steady_clock::now() - start_ > *budget_.wall_clock) {
    exhausted_ = true;
    return false;
  }
  return true;
}

std::chrono::microseconds SearchMeter::elapsed() const {
  return std::chrono::duration_cast<std::chrono::microseconds>(
      std::chrono::steady_clock::now() - start_);
}

LabelSearch::LabelSearch(const Graph& g, int threshold, SearchMeter& meter)
    : n_(g.vertex_count()), threshold_(threshold), meter_(meter) {
  if (n_ > kMaxSearchVertices) {
    throw InvalidArgument("exact search supports at most " +
                          std::to_string(kMaxSearchVertices) + " vertices");
  }
  if (threshold < 0) throw InvalidArgument("threshold must be nonnegative");
  adjacency_.assign(static_cast<std::size_t>(n_), 0);
  for (int u = 1; u <= n_; ++u) {
    for (int w : g.neighbors(u)) adjacency_[u - 1] |= Mask{1} << (w - 1);
  }
}

std::optional<LabelSearch::Found> LabelSearch::find(int allowance) {
  if (allowance < 0) return std::nullopt;
  allowance_ = allowance;
  placed_ = 0;
  cost_ = 0;
  order_.assign(static_cast<std::size_t>(n_), -1);
  label_.assign(static_cast<std::size_t>(n_), 0);
  open_degree_.resize(static_cast<std::size_t>(n_));
  for (int u = 0; u < n_; ++u) open_degree_[u] = std::popcount(adjacency_[u]);

  if (!search(0)) return std::nullopt;
  Found found;
  found.long_edges = cost_;
  for (int v : order_) found.order.push_back(v + 1);
  return found;
}

int LabelSearch::lower_bound(int next_label) const {
  int per_vertex = 0;
  int overflow = 0;
  Mask pending = 0;
  for (int j = 1; j < next_label; ++j) {
    const int u = order_[j - 1];
    if (open_degree_[u] == 0) continue;
    const int slots = std::max(0, j + threshold_ - next_label + 1);
    per_vertex += std::max(0, open_degree_[u] - slots);
    pending |= adjacency_[u] & ~placed_;
    overflow = std::max(overflow, std::popcount(pending) - slots);
  }
  return std::max(per_vertex, overflow);
}

std::string LabelSearch::state_key(int placed_count) const {
  std::string key(sizeof(Mask) + 1, '\0');
  for (std::size_t b = 0; b < sizeof(Mask); ++b) {
    key[b] = static_cast<char>((placed_ >> (8 * b)) & 0xff);
  }
  key[sizeof(Mask)] = static_cast<char>(placed_count > 0 ? order_[0] : 0xff);
  const int first = std::max(1, placed_count + 1 - threshold_);
  for (int j = first; j <= placed_count; ++j) {
    const int u = order_[j - 1];
    key.push_back(static_cast<char>(open_degree_[u] > 0 ? u : 0xff));
  }
  return key;
}

bool LabelSearch::search(int placed_count) {
  if (placed_count == n_) return true;
  const int next_label = placed_count + 1;

  if (cost_ + lower_bound(next_label) > allowance_) return false;

  const Mask unplaced = (n_ == 64 ? ~Mask{0} : ((Mask{1} << n_) - 1)) & ~placed_;
  if (placed_count > 0) {
    // Some vertex with a larger id than the first must remain for the last label.
    const int first = order_[0];
    const Mask above = first >= 63 ? 0 : ~((Mask{2} << first) - 1);
    if ((unplaced & above) == 0) return false;
  }

  const int slack = allowance_ - cost_;
  const std::string key = state_key(placed_count);
  if (const auto it = failed_.find(key); it != failed_.end() && it->second >= slack) {
    return false;
  }

  if (!meter_.tick()) return false;

  for (Mask rest = unplaced; rest != 0; rest &= rest - 1) {
    const int w = std::countr_zero(rest);
    int fresh_long = 0;
    for (Mask nb = adjacency_[w] & placed_; nb != 0; nb &= nb - 1) {
      const int u = std::countr_zero(nb);
      if (next_label - label_[u] > threshold_) ++fresh_long;
    }
    if (cost_ + fresh_long > allowance_) continue;

    order_[placed_count] = w;
    label_[w] = next_label;
    placed_ |= Mask{1} << w;
    cost_ += fresh_long;
    for (Mask nb = adjacency_[w]; nb != 0; nb &= nb - 1) --open_degree_[std::countr_zero(nb)];
    open_degree_[w] = std::popcount(adjacency_[w] & ~placed_);

    if (search(placed_count + 1)) return true;

    for (Mask nb = adjacency_[w]; nb != 0; nb &= nb - 1) ++open_degree_[std::countr_zero(nb)];
    cost_ -= fresh_long;
    placed_ &= ~(Mask{1} << w);
    open_degree_[w] = std::popcount(adjacency_[w] & ~placed_);
    label_[w] = 0;
    order_[placed_count] = -1;

    if (meter_.exhausted()) return false;
  }

  if (failed_.size() < memo_limit_ || failed_.count(key) != 0) {
    int& refuted = failed_[key];
    refuted = std::max(refuted, slack);
  }
  return false;
}

}  // namespace bandred::detail
