#include "abm/history.hpp"

#include <stdexcept>

#include "abm/errors.hpp"

namespace abm {

NodeHistory::NodeHistory(std::size_t capacity, std::size_t dimension)
    : capacity_(capacity), dimension_(dimension) {
  if (capacity == 0) throw ConfigError("NodeHistory: capacity must be positive");
  if (dimension == 0) throw ConfigError("NodeHistory: state dimension must be positive");
}

void NodeHistory::push(double x, std::span<const double> y, std::span<const double> dy) {
  if (y.size() != dimension_ || dy.size() != dimension_) {
    throw std::invalid_argument("NodeHistory::push: state dimension mismatch");
  }
  if (!nodes_.empty() && !(x > nodes_.back().x)) {
    throw std::invalid_argument("NodeHistory::push: abscissae must be strictly increasing");
  }
  if (nodes_.size() == capacity_) nodes_.pop_front();
  nodes_.push_back(Node{x, State(y.begin(), y.end()), State(dy.begin(), dy.end())});
}

const Node& NodeHistory::back(std::size_t k) const {
  if (k >= nodes_.size()) throw std::out_of_range("NodeHistory::back: index past oldest node");
  return nodes_[nodes_.size() - 1 - k];
}

std::vector<double> NodeHistory::shifted_abscissae(std::size_t count) const {
  if (count > nodes_.size()) {
    throw std::out_of_range("NodeHistory::shifted_abscissae: not enough nodes");
  }
  const double origin = nodes_.back().x;
  std::vector<double> out;
  out.reserve(count);
  for (std::size_t k = nodes_.size() - count; k < nodes_.size(); ++k) {
    out.push_back(nodes_[k].x - origin);
  }
  return out;
}

}  // namespace abm
