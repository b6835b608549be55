#pragma once

#include <span>
#include <vector>

namespace bandred {

/// Bijection from vertex ids 1..size() to labels 1..size().
///
/// Both directions are stored, so label() and vertex_at() are O(1).
class Numbering {
 public:
  Numbering() = default;

  // labels[i] is the label of vertex i+1.
  static Numbering from_labels(std::vector<int> labels);
  // order[i] is the vertex that receives label i+1.
  static Numbering from_order(std::vector<int> order);
  static Numbering identity(int size);

  int size() const noexcept { return static_cast<int>(label_.size()); }
  int label(int vertex) const;
  int vertex_at(int label) const;

  std::span<const int> labels() const noexcept { return label_; }
  std::span<const int> order() const noexcept { return inverse_; }

  // label -> size()+1-label
  Numbering reversed() const;

  friend bool operator==(const Numbering&, const Numbering&) = default;

 private:
  std::vector<int> label_;
  std::vector<int> inverse_;
};

}  // namespace bandred
