#include "abm/poly/problem.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "abm/errors.hpp"

namespace abm::poly {

double rhs(double x) noexcept { return (x - 1.0) * (x - 2.0) * (x - 3.0) * (x - 4.0); }

double rhs_expanded(double x) noexcept {
  return (((x - 10.0) * x + 35.0) * x - 50.0) * x + 24.0;
}

double exact(double x) noexcept {
  return ((((x / 5.0 - 2.5) * x + 35.0 / 3.0) * x - 25.0) * x + 24.0) * x - 727.0 / 120.0;
}

PolyRun run_poly_case(const PolyCase& c) {
  if (!(c.x_end > c.x0)) throw ConfigError("poly case: x_end must exceed x0");

  PolyRun run;
  run.rows.push_back(PolyRow{0, c.x0, 0.0, c.y0, exact(c.x0), c.y0 - exact(c.x0), 0.0, 0});

  auto f = [](double x, std::span<const double>, std::span<double> dydx) { dydx[0] = rhs(x); };
  auto sink = [&run](const StepRecord& rec) {
    const double y = rec.y_am[0];
    const double ye = exact(rec.x_next);
    run.rows.push_back(PolyRow{rec.index + 1, rec.x_next, rec.dx, y, ye, y - ye, rec.epsilon_max,
                               rec.effective_order});
  };
  run.result = integrate(f, State{c.y0}, c.x0, StopCondition::at(c.x_end), c.config, sink);
  return run;
}

int fit_error_degree(std::span<const double> x, std::span<const double> err, int max_degree,
                     double rel_tol) {
  const auto n = static_cast<Eigen::Index>(x.size());
  if (x.size() != err.size() || n == 0) throw ConfigError("fit_error_degree: bad sample set");

  const auto [lo_it, hi_it] = std::minmax_element(x.begin(), x.end());
  const double mid = 0.5 * (*lo_it + *hi_it);
  const double half = std::max(0.5 * (*hi_it - *lo_it), 1e-300);

  Eigen::VectorXd b(n);
  for (Eigen::Index i = 0; i < n; ++i) b(i) = err[static_cast<std::size_t>(i)];
  const double rms = b.norm() / std::sqrt(static_cast<double>(n));
  if (rms == 0.0) return 0;

  for (int degree = 0; degree <= max_degree; ++degree) {
    if (degree + 1 > n) break;
    Eigen::MatrixXd a(n, degree + 1);
    for (Eigen::Index i = 0; i < n; ++i) {
      const double t = (x[static_cast<std::size_t>(i)] - mid) / half;
      double p = 1.0;
      for (int k = 0; k <= degree; ++k) {
        a(i, k) = p;
        p *= t;
      }
    }
    const Eigen::VectorXd coef = a.colPivHouseholderQr().solve(b);
    const double resid = (a * coef - b).norm() / std::sqrt(static_cast<double>(n));
    if (resid <= rel_tol * rms) return degree;
  }
  return max_degree + 1;
}

}  // namespace abm::poly
