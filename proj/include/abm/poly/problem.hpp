#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "abm/integrator.hpp"

namespace abm::poly {

/// y' = (x-1)(x-2)(x-3)(x-4)
[[nodiscard]] double rhs(double x) noexcept;

/// Expanded form x^4 - 10x^3 + 35x^2 - 50x + 24.
[[nodiscard]] double rhs_expanded(double x) noexcept;

/// Closed-form solution with y(0.5) = 1.
[[nodiscard]] double exact(double x) noexcept;

struct PolyCase {
  double x0 = 0.5;
  double y0 = 1.0;
  double x_end = 5.0;
  IntegratorConfig config{.order_ab = 4,
                          .target_correction = 1e-8,
                          .dx_initial = 0.25,
                          .dx_min = 0.0,
                          .growth_cap = 3.0,
                          .mode = Mode::AbFixed,
                          .max_steps = 1'000'000};
};

/// One trajectory row; row 0 is the initial condition.
struct PolyRow {
  std::size_t i = 0;
  double x = 0.0;
  double dx = 0.0;
  double y = 0.0;
  double y_exact = 0.0;
  double error = 0.0;
  double epsilon_max = 0.0;
  int effective_order = 0;
};

struct PolyRun {
  IntegrationResult result;
  std::vector<PolyRow> rows;

  [[nodiscard]] double final_error() const { return rows.back().error; }
};

/// Runs one case and tabulates the accumulated error y_numeric - exact.
/// Integration failures are reported through result.status.
[[nodiscard]] PolyRun run_poly_case(const PolyCase& c);

/// Smallest polynomial degree in [0, max_degree] whose least-squares fit to
/// (x, err) leaves an RMS residual at most `rel_tol` times the RMS of err.
/// Returns max_degree + 1 when none qualifies.
[[nodiscard]] int fit_error_degree(std::span<const double> x, std::span<const double> err,
                                   int max_degree = 4, double rel_tol = 1e-6);

}  // namespace abm::poly
