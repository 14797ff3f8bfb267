#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "abm/integrator.hpp"
#include "abm/tov/constants.hpp"
#include "abm/tov/star.hpp"

namespace abm::tov {

/// Evaluates the objective at two abscissae. Implementations may run the
/// two evaluations concurrently.
using PairObjective = std::function<std::array<double, 2>(double, double)>;

struct TernaryResult {
  double argmax = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  int iterations = 0;
  std::size_t evaluations = 0;
};

/// Ternary search for the maximum of a unimodal function. Each iteration
/// probes the two interior third-points and drops the outer third on the
/// lower side, so the bracket shrinks by 2/3. Stops once
/// (hi - lo) <= rel_tol * |midpoint| and returns the midpoint.
[[nodiscard]] TernaryResult ternary_search_max(const PairObjective& f, double lo, double hi,
                                               double rel_tol, int max_iterations = 500);
[[nodiscard]] TernaryResult ternary_search_max(const std::function<double(double)>& f, double lo,
                                               double hi, double rel_tol, int max_iterations = 500);

/// Summary of one star, without its trajectory.
struct StarSummary {
  double mass = 0.0;    // g
  double radius = 0.0;  // cm
  std::size_t steps = 0;
  StarStatus status = StarStatus::Ok;
  std::string message;
};

/// Star evaluations memoized by central pressure for one fixed integrator
/// configuration. Safe for concurrent use.
class StarCache {
 public:
  StarCache(IntegratorConfig config, PhysicalConstants constants);

  [[nodiscard]] StarSummary get(double p_central);
  [[nodiscard]] std::size_t integrations() const;

 private:
  IntegratorConfig config_;
  PhysicalConstants constants_;
  mutable std::mutex mutex_;
  std::map<double, StarSummary> memo_;
  std::size_t integrations_ = 0;
};

struct SieveResult {
  double p_central = 0.0;  // erg cm^-3
  double mass = 0.0;       // g
  double radius = 0.0;     // cm
  std::size_t steps = 0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  int iterations = 0;
  std::size_t star_integrations = 0;
};

/// Central pressure of the maximum-mass star on [p_lo, p_hi]. M(P_c) must be
/// unimodal there. Throws std::runtime_error when a probe star fails.
/// With jobs > 1 the two probes of an iteration run on separate threads.
[[nodiscard]] SieveResult trinary_sieve(double p_lo, double p_hi, const IntegratorConfig& config,
                                        const PhysicalConstants& k, double bracket_tolerance,
                                        int jobs = 1);

struct SweepReference {
  double mass = 0.0;    // g
  double radius = 0.0;  // cm
};

struct SweepCell {
  int order = 0;
  double tolerance = 0.0;
  std::size_t steps = 0;
  double mass_msun = 0.0;
  double radius_km = 0.0;
  double rel_dm = 0.0;
  double rel_dr = 0.0;
  StarStatus status = StarStatus::Ok;
  std::string message;

  [[nodiscard]] bool ok() const noexcept { return status == StarStatus::Ok; }
};

struct SweepRequest {
  std::vector<int> orders;
  std::vector<double> tolerances;
  double p_central = 0.0;
  SweepReference reference;
  /// order_ab and target_correction are overwritten per cell.
  IntegratorConfig base;
  PhysicalConstants constants;
};

/// Order-major grid of single-star runs. A failing cell is recorded and the
/// sweep continues.
[[nodiscard]] std::vector<SweepCell> parameter_sweep_serial(const SweepRequest& req);

/// Same table as parameter_sweep_serial, cells distributed over `jobs`
/// OpenMP threads.
[[nodiscard]] std::vector<SweepCell> parameter_sweep(const SweepRequest& req, int jobs);

/// One cell of the sweep grid.
[[nodiscard]] SweepCell run_sweep_cell(const SweepRequest& req, int order, double tolerance);

}  // namespace abm::tov
