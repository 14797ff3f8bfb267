#include "abm/tov/eos.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "abm/errors.hpp"

namespace abm::tov {

void PhysicalConstants::validate() const {
  for (const double v : {neutron_mass, speed_of_light, planck, gravitational, solar_mass}) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw ConfigError("physical constants must be positive and finite");
    }
  }
}

double PhysicalConstants::pressure_scale() const noexcept {
  const double m2 = neutron_mass * neutron_mass;
  const double c2 = speed_of_light * speed_of_light;
  return std::numbers::pi * m2 * m2 * c2 * c2 * speed_of_light / (3.0 * planck * planck * planck);
}

double relativity_parameter(double n, const PhysicalConstants& k) {
  if (!(n >= 0.0) || !std::isfinite(n)) {
    throw std::domain_error("relativity_parameter: number density must be finite and >= 0");
  }
  return k.planck / (2.0 * k.neutron_mass * k.speed_of_light) *
         std::cbrt(3.0 * n / std::numbers::pi);
}

double number_density(double x, const PhysicalConstants& k) {
  const double q = 2.0 * k.neutron_mass * k.speed_of_light * x / k.planck;
  return std::numbers::pi / 3.0 * q * q * q;
}

namespace {

// Below this x the closed forms lose more than a few digits to cancellation.
constexpr double kSeriesLimit = 0.5;

// Both brackets are integrals of even integrands:
//   pressure: 8  * int_0^x t^4 / sqrt(1 + t^2) dt
//   kinetic:  24 * int_0^x t^2 (sqrt(1 + t^2) - 1) dt
// expanded with the binomial series of (1 + t^2)^(-1/2) and (1 + t^2)^(1/2).
double pressure_series(double x) noexcept {
  const double x2 = x * x;
  double power = x2 * x2 * x;  // x^5
  double coef = 1.0;           // binom(-1/2, k)
  double sum = 0.0;
  for (int k = 0; k < 60; ++k) {
    const double term = coef * power / (2.0 * k + 5.0);
    sum += term;
    if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
    coef *= -(2.0 * k + 1.0) / (2.0 * k + 2.0);
    power *= x2;
  }
  return 8.0 * sum;
}

double kinetic_series(double x) noexcept {
  const double x2 = x * x;
  double power = x2 * x2 * x;  // x^5
  double coef = 0.5;           // binom(1/2, k) at k = 1
  double sum = 0.0;
  for (int k = 1; k < 60; ++k) {
    const double term = coef * power / (2.0 * k + 3.0);
    sum += term;
    if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
    coef *= (0.5 - k) / (k + 1.0);
    power *= x2;
  }
  return 24.0 * sum;
}

}  // namespace

double pressure_bracket(double x) noexcept {
  if (x < kSeriesLimit) return pressure_series(x);
  const double root = std::sqrt(x * x + 1.0);
  return x * (2.0 * x * x - 3.0) * root + 3.0 * std::asinh(x);
}

double kinetic_bracket(double x) noexcept {
  if (x < kSeriesLimit) return kinetic_series(x);
  const double root = std::sqrt(x * x + 1.0);
  return 3.0 * x * (2.0 * x * x + 1.0) * root - 8.0 * x * x * x - 3.0 * std::asinh(x);
}

double eos_pressure(double n, const PhysicalConstants& k) {
  return k.pressure_scale() * pressure_bracket(relativity_parameter(n, k));
}

double eos_energy_density(double n, const PhysicalConstants& k) {
  const double rest = k.neutron_mass * k.speed_of_light * k.speed_of_light * n;
  return rest + k.pressure_scale() * kinetic_bracket(relativity_parameter(n, k));
}

EosPoint eos_point(double n, const PhysicalConstants& k) {
  EosPoint p;
  p.n = n;
  p.x = relativity_parameter(n, k);
  p.pressure = k.pressure_scale() * pressure_bracket(p.x);
  p.u_kinetic = k.pressure_scale() * kinetic_bracket(p.x);
  p.rho = k.neutron_mass * k.speed_of_light * k.speed_of_light * n + p.u_kinetic;
  return p;
}

double invert_pressure(double p_target, const PhysicalConstants& k) {
  if (!(p_target >= 0.0) || !std::isfinite(p_target)) {
    throw std::domain_error("invert_pressure: pressure must be finite and >= 0");
  }
  if (p_target == 0.0) return 0.0;

  const double target = p_target / k.pressure_scale();
  double lo = 0.0;
  double hi = 1.0;
  while (pressure_bracket(hi) < target) {
    lo = hi;
    hi *= 2.0;
    if (!std::isfinite(hi)) throw std::domain_error("invert_pressure: pressure out of range");
  }
  for (int iter = 0; iter < 2000; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (pressure_bracket(mid) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double x = std::abs(pressure_bracket(lo) - target) <= std::abs(pressure_bracket(hi) - target)
                       ? lo
                       : hi;
  return number_density(x, k);
}

}  // namespace abm::tov
