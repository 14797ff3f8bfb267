#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "abm/history.hpp"
#include "abm/quadrature.hpp"

namespace abm {

enum class Mode {
  AbFixed,      ///< Adams-Bashforth only, constant step
  AbmFixed,     ///< PECE predictor-corrector, constant step
  AbmAdaptive,  ///< PECE with step size driven by the fractional correction
};

[[nodiscard]] std::string_view to_string(Mode mode) noexcept;
/// Accepts "ab-fixed", "abm-fixed", "abm-adaptive". Throws ConfigError otherwise.
[[nodiscard]] Mode parse_mode(std::string_view text);

struct IntegratorConfig {
  /// Adams-Bashforth order N. The corrector runs at N + 1.
  int order_ab = 4;
  /// Target fractional correction E per step (adaptive mode only).
  double target_correction = 1e-8;
  double dx_initial = 0.01;
  double dx_min = 0.0;
  /// Largest allowed ratio between consecutive step sizes.
  double growth_cap = 3.0;
  Mode mode = Mode::AbmAdaptive;
  std::size_t max_steps = 1'000'000;

  /// Throws ConfigError when a field is out of range.
  void validate() const;
};

struct StepRecord {
  std::size_t index = 0;
  double x_next = 0.0;
  double dx = 0.0;
  State y_ab;
  /// Accepted state. Equals y_ab in AbFixed mode.
  State y_am;
  State epsilon;
  double epsilon_max = 0.0;
  int effective_order = 0;
  bool at_min_step = false;
  bool clamped_to_end = false;
};

enum class IntegrationStatus {
  ReachedEnd,
  StopConditionMet,
  MaxStepsExceeded,
  NonFiniteState,
  CallbackFailed,
  StepUnderflow,
};

[[nodiscard]] std::string_view to_string(IntegrationStatus status) noexcept;

/// Outcome of integrate(). On failure x/y hold the last accepted node.
struct IntegrationResult {
  IntegrationStatus status = IntegrationStatus::ReachedEnd;
  std::string message;
  double x = 0.0;
  State y;
  std::size_t steps = 0;
  std::size_t derivative_evaluations = 0;

  [[nodiscard]] bool ok() const noexcept {
    return status == IntegrationStatus::ReachedEnd ||
           status == IntegrationStatus::StopConditionMet;
  }
};

/// dy/dx at (x, y), written into `dydx`. May throw to abort the integration.
using Derivative = std::function<void(double x, std::span<const double> y, std::span<double> dydx)>;
using StatePredicate = std::function<bool(double x, std::span<const double> y)>;
using StepSink = std::function<void(const StepRecord&)>;

/// Integration stops on whichever is set and fires first.
struct StopCondition {
  std::optional<double> x_end;
  StatePredicate predicate;

  [[nodiscard]] static StopCondition at(double x_end) { return {x_end, {}}; }
  [[nodiscard]] static StopCondition when(StatePredicate p) { return {std::nullopt, std::move(p)}; }
};

/// Adams-Bashforth prediction at x_i + dx from the newest `nodes` history
/// entries. One set of weights serves every component.
[[nodiscard]] State ab_predict(const NodeHistory& history, std::size_t nodes, double dx);

/// Adams-Moulton correction using the newest `nodes` history entries plus the
/// derivative predicted at x_i + dx.
[[nodiscard]] State am_correct(const NodeHistory& history, std::size_t nodes,
                               std::span<const double> predicted_derivative, double dx);

struct FractionalCorrection {
  State epsilon;
  double max = 0.0;
};

/// Per-component (y_am - y_ab) / y_ab, falling back to the plain difference
/// where y_ab is exactly zero. `max` is the largest magnitude.
[[nodiscard]] FractionalCorrection fractional_correction(std::span<const double> y_ab,
                                                         std::span<const double> y_am);

/// Next step from dx * (E / epsilon_max)^(1 / am_order), limited to
/// growth_cap * dx and floored at dx_min. Assumes the error constant is the
/// same on consecutive steps. epsilon_max == 0 takes the growth cap.
[[nodiscard]] double next_step_size(double epsilon_max, const IntegratorConfig& config,
                                    int effective_am_order, double dx_current);

/// Effective Adams-Bashforth order for step `index` during bootstrap.
[[nodiscard]] constexpr int effective_order(std::size_t index, int order_ab) noexcept {
  return index + 1 < static_cast<std::size_t>(order_ab) ? static_cast<int>(index + 1) : order_ab;
}

/// Integrates y' = f(x, y) from (x0, y0) with bootstrapped Adams methods.
///
/// Each ABM step is Predict, Evaluate at the prediction, Correct, Evaluate at
/// the corrected state; only the second evaluation enters the history. The
/// current step is always accepted; adaptive mode adjusts the next one. With
/// an x_end stop the last step is shortened to land on x_end exactly.
[[nodiscard]] IntegrationResult integrate(const Derivative& f, State y0, double x0,
                                          const StopCondition& stop,
                                          const IntegratorConfig& config,
                                          const StepSink& sink = {});

}  // namespace abm
