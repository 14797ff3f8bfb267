#pragma once

namespace abm::tov {

/// CGS constants. One record is threaded through every calculation and
/// written into every output manifest.
struct PhysicalConstants {
  double neutron_mass = 1.67492749804e-24;  // g
  double speed_of_light = 2.99792458e10;    // cm s^-1
  double planck = 6.62607015e-27;           // erg s
  double gravitational = 6.67430e-8;        // cm^3 g^-1 s^-2
  double solar_mass = 1.98892e33;           // g

  /// Throws ConfigError if any constant is non-positive or non-finite.
  void validate() const;

  /// pi m_n^4 c^5 / (3 h^3), the pressure scale of the degenerate gas.
  [[nodiscard]] double pressure_scale() const noexcept;
};

inline constexpr double kCmPerKm = 1.0e5;

}  // namespace abm::tov
