#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace abm {

/// Largest node count accepted by quadrature_weights.
inline constexpr std::size_t kMaxQuadratureNodes = 32;

/// Integration weights of a Lagrange interpolant, one per node, in units of
/// the abscissa. Applying them to derivative samples at the nodes gives the
/// integral of the interpolant from the origin to `upper`.
struct QuadratureWeights {
  std::vector<double> weights;
  double upper = 0.0;

  [[nodiscard]] std::size_t size() const noexcept { return weights.size(); }
  [[nodiscard]] double operator[](std::size_t j) const { return weights[j]; }
  [[nodiscard]] double sum() const noexcept;
};

/// Weights for integrating the interpolant through `shifted_nodes` over
/// [0, upper]. Node positions are measured from the most recent history node,
/// so that node sits at 0 (an Adams-Moulton future node sits at `upper`).
///
/// For each node j the basis polynomial is obtained by synthetic division of
/// the node polynomial prod_k (t - t_k) by (t - t_j), then integrated
/// coefficient-wise. Work is done in t = xbar / s, with s the largest of
/// |upper| and the node magnitudes, so every root lies in [-1, 1].
///
/// Throws DegenerateNodesError for repeated or non-finite nodes and
/// ConfigError for an empty node set or more than kMaxQuadratureNodes nodes.
[[nodiscard]] QuadratureWeights quadrature_weights(std::span<const double> shifted_nodes,
                                                   double upper);

namespace detail {

/// Ascending-power coefficients of prod_k (t - roots_k).
[[nodiscard]] std::vector<double> node_polynomial(std::span<const double> roots);

/// Divides `poly` (ascending powers) by (t - root). Returns the quotient and
/// writes the remainder.
[[nodiscard]] std::vector<double> synthetic_divide(std::span<const double> poly, double root,
                                                   double& remainder);

/// Deflation by (t - root) that is stable for a root of any modulus: the
/// `smaller_roots` lowest coefficients come from the backward recurrence,
/// the rest from synthetic division. `remainder` is the synthetic one.
[[nodiscard]] std::vector<double> composite_divide(std::span<const double> poly, double root,
                                                   std::size_t smaller_roots, double& remainder);

/// Integral over [0, 1] of a polynomial given by ascending-power coefficients.
[[nodiscard]] double integrate_unit(std::span<const double> poly) noexcept;

/// Integral over [0, bound] of a polynomial given by ascending-power coefficients.
[[nodiscard]] double integrate_to(std::span<const double> poly, double bound) noexcept;

}  // namespace detail
}  // namespace abm
