#pragma once

#include <cstddef>
#include <deque>
#include <span>
#include <vector>

namespace abm {

using State = std::vector<double>;

/// One accepted integration node: abscissa, state and the derivative
/// evaluated at that (corrected) state.
struct Node {
  double x = 0.0;
  State y;
  State dy;
};

/// Bounded window of the most recent accepted nodes. Abscissae are strictly
/// increasing; pushing onto a full history evicts the oldest node.
class NodeHistory {
 public:
  NodeHistory(std::size_t capacity, std::size_t dimension);

  /// Throws std::invalid_argument on a dimension mismatch or a non-increasing x.
  void push(double x, std::span<const double> y, std::span<const double> dy);

  [[nodiscard]] std::size_t size() const noexcept { return nodes_.size(); }
  [[nodiscard]] bool empty() const noexcept { return nodes_.empty(); }
  [[nodiscard]] std::size_t capacity() const noexcept { return capacity_; }
  [[nodiscard]] std::size_t dimension() const noexcept { return dimension_; }

  /// k-th node counted back from the newest (k = 0 is the newest).
  [[nodiscard]] const Node& back(std::size_t k = 0) const;

  /// Abscissae of the newest `count` nodes, oldest first, shifted so that the
  /// newest sits at 0.
  [[nodiscard]] std::vector<double> shifted_abscissae(std::size_t count) const;

  void clear() noexcept { nodes_.clear(); }

 private:
  std::size_t capacity_;
  std::size_t dimension_;
  std::deque<Node> nodes_;
};

}  // namespace abm
