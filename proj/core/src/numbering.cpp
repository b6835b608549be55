#include "bandred/numbering.hpp"

#include <numeric>
#include <string>

#include "bandred/errors.hpp"

namespace bandred {

namespace {

std::vector<int> invert(const std::vector<int>& map, const char* what) {
  const int n = static_cast<int>(map.size());
  std::vector<int> inverse(map.size(), 0);
  for (int i = 0; i < n; ++i) {
    const int image = map[static_cast<std::size_t>(i)];
    if (image < 1 || image > n) {
      throw InvalidArgument(std::string(what) + " value " + std::to_string(image) +
                            " out of range [1, " + std::to_string(n) + "]");
    }
    if (inverse[image - 1] != 0) {
      throw InvalidArgument(std::string(what) + " value " + std::to_string(image) +
                            " repeated; not a bijection");
    }
    inverse[image - 1] = i + 1;
  }
  return inverse;
}

}  // namespace

Numbering Numbering::from_labels(std::vector<int> labels) {
  Numbering nu;
  nu.inverse_ = invert(labels, "label");
  nu.label_ = std::move(labels);
  return nu;
}

Numbering Numbering::from_order(std::vector<int> order) {
  Numbering nu;
  nu.label_ = invert(order, "vertex");
  nu.inverse_ = std::move(order);
  return nu;
}

Numbering Numbering::identity(int size) {
  if (size < 0) throw InvalidArgument("negative numbering size");
  std::vector<int> labels(static_cast<std::size_t>(size));
  std::iota(labels.begin(), labels.end(), 1);
  return from_labels(std::move(labels));
}

int Numbering::label(int vertex) const {
  if (vertex < 1 || vertex > size()) {
    throw InvalidArgument("vertex " + std::to_string(vertex) + " outside numbering");
  }
  return label_[vertex - 1];
}

int Numbering::vertex_at(int label) const {
  if (label < 1 || label > size()) {
    throw InvalidArgument("label " + std::to_string(label) + " outside numbering");
  }
  return inverse_[label - 1];
}

Numbering Numbering::reversed() const {
  std::vector<int> labels(label_);
  for (int& l : labels) l = size() + 1 - l;
  return from_labels(std::move(labels));
}

}  // namespace bandred
