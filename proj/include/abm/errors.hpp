#pragma once

#include <stdexcept>
#include <string>

namespace abm {

/// Invalid integrator or problem configuration.
class ConfigError : public std::invalid_argument {
 public:
  explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

/// Interpolation nodes that do not define a unique Lagrange polynomial.
class DegenerateNodesError : public std::invalid_argument {
 public:
  explicit DegenerateNodesError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace abm
