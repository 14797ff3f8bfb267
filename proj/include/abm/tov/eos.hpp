#pragma once

#include "abm/tov/constants.hpp"

namespace abm::tov {

/// Zero-temperature ideal neutron gas, parameterized by the relativity
/// parameter x = (h / 2 m_n c) (3 n / pi)^(1/3).
struct EosPoint {
  double n = 0.0;          // cm^-3
  double x = 0.0;
  double pressure = 0.0;   // erg cm^-3
  double rho = 0.0;        // erg cm^-3, rest mass plus kinetic
  double u_kinetic = 0.0;  // erg cm^-3
};

/// Throws std::domain_error for negative or non-finite n.
[[nodiscard]] double relativity_parameter(double n, const PhysicalConstants& k);
[[nodiscard]] double number_density(double x, const PhysicalConstants& k);

/// x (2x^2 - 3) sqrt(x^2 + 1) + 3 asinh(x), evaluated by series for small x
/// where the closed form cancels to ~(8/5) x^5.
[[nodiscard]] double pressure_bracket(double x) noexcept;

/// 3x (2x^2 + 1) sqrt(x^2 + 1) - 8x^3 - 3 asinh(x), ~(12/5) x^5 for small x.
[[nodiscard]] double kinetic_bracket(double x) noexcept;

[[nodiscard]] double eos_pressure(double n, const PhysicalConstants& k);
[[nodiscard]] double eos_energy_density(double n, const PhysicalConstants& k);
[[nodiscard]] EosPoint eos_point(double n, const PhysicalConstants& k);

/// Number density with eos_pressure(n) == p_target. Solved in x: the bracket
/// [0, x_hi] is doubled until it contains the target, then bisected to
/// machine precision. Throws std::domain_error for negative or non-finite p.
[[nodiscard]] double invert_pressure(double p_target, const PhysicalConstants& k);

}  // namespace abm::tov
