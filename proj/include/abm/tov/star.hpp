#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "abm/integrator.hpp"
#include "abm/tov/constants.hpp"

namespace abm::tov {

enum class RateStatus {
  Ok,
  NegativePressure,  ///< surface reached; rates are not defined
  Horizon,           ///< 2Gm / (c^2 r) >= 1
};

struct TovRates {
  double dm_dr = 0.0;  // g cm^-1
  double dp_dr = 0.0;  // erg cm^-4
  RateStatus status = RateStatus::Ok;
};

/// Mass and pressure gradients of a static spherical star in hydrostatic
/// equilibrium. rho comes from the degenerate neutron gas via
/// invert_pressure. The regular center r = 0 returns (0, 0).
[[nodiscard]] TovRates tov_derivatives(double r, double m, double p, const PhysicalConstants& k);

/// 2 G m / (c^2 r); zero at the center.
[[nodiscard]] double compactness(double r, double m, const PhysicalConstants& k) noexcept;

/// Integrator settings used for single stars unless overridden.
[[nodiscard]] IntegratorConfig default_star_config(int order = 10, double tolerance = 1e-8);

enum class StarStatus {
  Ok,
  Horizon,
  MaxSteps,
  Failed,
};

[[nodiscard]] std::string_view to_string(StarStatus status) noexcept;

struct StarStep {
  std::size_t i = 0;
  double r = 0.0;   // cm
  double dr = 0.0;  // cm
  double m = 0.0;   // g
  double p = 0.0;   // erg cm^-3
  double epsilon_max = 0.0;
  int effective_order = 0;
  bool at_min_step = false;
  /// Predicted pressure was negative and the rates were evaluated at P = 0.
  bool surface_clamped = false;
  /// Final step, the first with P <= 0.
  bool terminal = false;
};

struct StarSolution {
  double p_central = 0.0;  // erg cm^-3
  double mass = 0.0;       // g
  double radius = 0.0;     // cm
  std::size_t steps = 0;
  std::size_t derivative_evaluations = 0;
  StarStatus status = StarStatus::Ok;
  std::string message;
  /// Row 0 is the center.
  std::vector<StarStep> trajectory;

  [[nodiscard]] bool ok() const noexcept { return status == StarStatus::Ok; }
  [[nodiscard]] double mass_msun(const PhysicalConstants& k) const noexcept {
    return mass / k.solar_mass;
  }
  [[nodiscard]] double radius_km() const noexcept { return radius / kCmPerKm; }
};

/// Integrates (m, P) outward from r = 0 with adaptive ABM until the first
/// accepted step with P <= 0. With keep_trajectory false the trajectory is
/// left empty. Mass and radius are the final accepted values,
/// with no interpolation to the zero-pressure point. Throws ConfigError for a
/// non-positive central pressure.
[[nodiscard]] StarSolution integrate_star(double p_central, const IntegratorConfig& config,
                                          const PhysicalConstants& k = {},
                                          bool keep_trajectory = true);

}  // namespace abm::tov
