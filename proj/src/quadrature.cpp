#include "abm/quadrature.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>
#include <string>

#include "abm/errors.hpp"

namespace abm {

double QuadratureWeights::sum() const noexcept {
  return std::accumulate(weights.begin(), weights.end(), 0.0);
}

namespace detail {

std::vector<double> node_polynomial(std::span<const double> roots) {
  std::vector<double> poly{1.0};
  poly.reserve(roots.size() + 1);
  for (const double root : roots) {
    poly.push_back(0.0);
    for (std::size_t k = poly.size() - 1; k > 0; --k) {
      poly[k] = poly[k - 1] - root * poly[k];
    }
    poly[0] = -root * poly[0];
  }
  return poly;
}

std::vector<double> synthetic_divide(std::span<const double> poly, double root,
                                     double& remainder) {
  const std::size_t degree = poly.size() - 1;
  std::vector<double> quotient(degree, 0.0);
  double carry = poly[degree];
  for (std::size_t k = degree; k > 0; --k) {
    quotient[k - 1] = carry;
    carry = poly[k - 1] + root * carry;
  }
  remainder = carry;
  return quotient;
}

std::vector<double> composite_divide(std::span<const double> poly, double root,
                                     std::size_t smaller_roots, double& remainder) {
  std::vector<double> quotient = synthetic_divide(poly, root, remainder);
  if (root == 0.0) return quotient;
  // Backward recurrence from the constant term for the low-order coefficients.
  const std::size_t split = std::min(smaller_roots, quotient.size());
  double q = -poly[0] / root;
  for (std::size_t k = 0; k < split; ++k) {
    if (k > 0) q = (q - poly[k]) / root;
    quotient[k] = q;
  }
  return quotient;
}

double integrate_unit(std::span<const double> poly) noexcept { return integrate_to(poly, 1.0); }

double integrate_to(std::span<const double> poly, double bound) noexcept {
  double total = 0.0;
  for (std::size_t k = poly.size(); k > 0; --k) {
    total = total * bound + poly[k - 1] / static_cast<double>(k);
  }
  return total * bound;
}

}  // namespace detail

namespace {

// Sum of |c_k| |t|^k, the size of the terms cancelling in p(t).
[[maybe_unused]] double horner_magnitude(std::span<const double> poly, double t) {
  double total = 0.0;
  for (std::size_t k = poly.size(); k > 0; --k) total = total * std::abs(t) + std::abs(poly[k - 1]);
  return total;
}

}  // namespace

QuadratureWeights quadrature_weights(std::span<const double> shifted_nodes, double upper) {
  const std::size_t count = shifted_nodes.size();
  if (count == 0) {
    throw ConfigError("quadrature_weights: at least one node is required");
  }
  if (count > kMaxQuadratureNodes) {
    throw ConfigError("quadrature_weights: " + std::to_string(count) +
                      " nodes exceeds the supported maximum of " +
                      std::to_string(kMaxQuadratureNodes));
  }
  if (!std::isfinite(upper)) {
    throw ConfigError("quadrature_weights: non-finite integration bound");
  }
  for (const double node : shifted_nodes) {
    if (!std::isfinite(node)) {
      throw DegenerateNodesError("quadrature_weights: non-finite node");
    }
  }
  std::vector<double> sorted(shifted_nodes.begin(), shifted_nodes.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw DegenerateNodesError("quadrature_weights: duplicate interpolation nodes");
  }

  QuadratureWeights out;
  out.upper = upper;
  out.weights.assign(count, 0.0);
  if (upper == 0.0) {
    return out;
  }

  // Work in t = xbar / span so every root and the bound lie in [-1, 1].
  double span = std::abs(upper);
  for (const double node : shifted_nodes) span = std::max(span, std::abs(node));
  const double bound = upper / span;
  std::vector<double> scaled(count);
  std::transform(shifted_nodes.begin(), shifted_nodes.end(), scaled.begin(),
                 [span](double node) { return node / span; });
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t k = i + 1; k < count; ++k) {
      if (scaled[i] == scaled[k]) {
        throw DegenerateNodesError("quadrature_weights: nodes coincide after scaling");
      }
    }
  }

  const std::vector<double> full = detail::node_polynomial(scaled);

  for (std::size_t j = 0; j < count; ++j) {
    std::size_t smaller = 0;
    for (std::size_t k = 0; k < count; ++k) {
      if (k != j && std::abs(scaled[k]) < std::abs(scaled[j])) ++smaller;
    }
    double remainder = 0.0;
    const std::vector<double> basis = detail::composite_divide(full, scaled[j], smaller, remainder);
    assert(std::abs(remainder) <= 1e-9 * horner_magnitude(full, scaled[j]));

    // basis(t_j), the product of (t_j - t_k) over k != j
    double at_node = 1.0;
    for (std::size_t k = 0; k < count; ++k) {
      if (k != j) at_node *= scaled[j] - scaled[k];
    }
    out.weights[j] = span * detail::integrate_to(basis, bound) / at_node;
  }
  return out;
}

}  // namespace abm
