#include "abm/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <string>

#include "abm/errors.hpp"

namespace abm {

std::string_view to_string(Mode mode) noexcept {
  switch (mode) {
    case Mode::AbFixed: return "ab-fixed";
    case Mode::AbmFixed: return "abm-fixed";
    case Mode::AbmAdaptive: return "abm-adaptive";
  }
  return "unknown";
}

Mode parse_mode(std::string_view text) {
  if (text == "ab-fixed") return Mode::AbFixed;
  if (text == "abm-fixed") return Mode::AbmFixed;
  if (text == "abm-adaptive") return Mode::AbmAdaptive;
  throw ConfigError("unknown integration mode '" + std::string(text) + "'");
}

std::string_view to_string(IntegrationStatus status) noexcept {
  switch (status) {
    case IntegrationStatus::ReachedEnd: return "reached_end";
    case IntegrationStatus::StopConditionMet: return "stop_condition_met";
    case IntegrationStatus::MaxStepsExceeded: return "max_steps_exceeded";
    case IntegrationStatus::NonFiniteState: return "non_finite_state";
    case IntegrationStatus::CallbackFailed: return "callback_failed";
    case IntegrationStatus::StepUnderflow: return "step_underflow";
  }
  return "unknown";
}

void IntegratorConfig::validate() const {
  if (order_ab < 1) throw ConfigError("order must be at least 1");
  if (static_cast<std::size_t>(order_ab) + 1 > kMaxQuadratureNodes) {
    throw ConfigError("order " + std::to_string(order_ab) + " exceeds the supported maximum of " +
                      std::to_string(kMaxQuadratureNodes - 1));
  }
  if (!(dx_initial > 0.0) || !std::isfinite(dx_initial)) {
    throw ConfigError("initial step must be positive and finite");
  }
  if (!(dx_min >= 0.0) || !std::isfinite(dx_min)) throw ConfigError("minimum step must be >= 0");
  if (dx_initial < dx_min) throw ConfigError("initial step is below the minimum step");
  if (mode == Mode::AbmAdaptive) {
    if (!(target_correction > 0.0) || !std::isfinite(target_correction)) {
      throw ConfigError("target fractional correction must be positive");
    }
    if (!(growth_cap > 1.0)) throw ConfigError("growth cap must exceed 1");
  }
  if (max_steps == 0) throw ConfigError("max_steps must be positive");
}

namespace {

State weighted_increment(const NodeHistory& history, std::size_t nodes, const QuadratureWeights& w,
                         std::span<const double> future_derivative) {
  const Node& newest = history.back();
  State out = newest.y;
  for (std::size_t j = 0; j < nodes; ++j) {
    const Node& node = history.back(nodes - 1 - j);
    const double weight = w[j];
    for (std::size_t c = 0; c < out.size(); ++c) out[c] += weight * node.dy[c];
  }
  if (!future_derivative.empty()) {
    const double weight = w[nodes];
    for (std::size_t c = 0; c < out.size(); ++c) out[c] += weight * future_derivative[c];
  }
  return out;
}

bool all_finite(std::span<const double> v) {
  return std::all_of(v.begin(), v.end(), [](double a) { return std::isfinite(a); });
}

}  // namespace

State ab_predict(const NodeHistory& history, std::size_t nodes, double dx) {
  if (history.empty()) throw ConfigError("ab_predict: empty history");
  if (nodes == 0 || nodes > history.size()) throw ConfigError("ab_predict: invalid node count");
  const QuadratureWeights w = quadrature_weights(history.shifted_abscissae(nodes), dx);
  return weighted_increment(history, nodes, w, {});
}

State am_correct(const NodeHistory& history, std::size_t nodes,
                 std::span<const double> predicted_derivative, double dx) {
  if (history.empty()) throw ConfigError("am_correct: empty history");
  if (nodes == 0 || nodes > history.size()) throw ConfigError("am_correct: invalid node count");
  if (predicted_derivative.size() != history.dimension()) {
    throw ConfigError("am_correct: derivative dimension mismatch");
  }
  std::vector<double> abscissae = history.shifted_abscissae(nodes);
  abscissae.push_back(dx);
  const QuadratureWeights w = quadrature_weights(abscissae, dx);
  return weighted_increment(history, nodes, w, predicted_derivative);
}

FractionalCorrection fractional_correction(std::span<const double> y_ab,
                                           std::span<const double> y_am) {
  if (y_ab.size() != y_am.size()) throw ConfigError("fractional_correction: dimension mismatch");
  FractionalCorrection out;
  out.epsilon.resize(y_ab.size());
  for (std::size_t c = 0; c < y_ab.size(); ++c) {
    const double diff = y_am[c] - y_ab[c];
    out.epsilon[c] = y_ab[c] != 0.0 ? diff / y_ab[c] : diff;
    out.max = std::max(out.max, std::abs(out.epsilon[c]));
  }
  return out;
}

double next_step_size(double epsilon_max, const IntegratorConfig& config, int effective_am_order,
                      double dx_current) {
  const double capped = config.growth_cap * dx_current;
  double next = capped;
  if (epsilon_max > 0.0) {
    const double ratio =
        std::pow(config.target_correction / epsilon_max, 1.0 / static_cast<double>(effective_am_order));
    next = std::min(ratio * dx_current, capped);
  }
  // NaN epsilon falls through to the floor.
  if (!(next >= config.dx_min)) next = config.dx_min;
  return next;
}

IntegrationResult integrate(const Derivative& f, State y0, double x0, const StopCondition& stop,
                            const IntegratorConfig& config, const StepSink& sink) {
  config.validate();
  if (y0.empty()) throw ConfigError("integrate: empty initial state");
  if (!std::isfinite(x0)) throw ConfigError("integrate: non-finite x0");
  if (stop.x_end && !(*stop.x_end > x0)) throw ConfigError("integrate: x_end must exceed x0");
  if (!stop.x_end && !stop.predicate) throw ConfigError("integrate: no stop condition");

  const std::size_t dim = y0.size();
  const auto order = static_cast<std::size_t>(config.order_ab);
  NodeHistory history(order + 1, dim);

  IntegrationResult result;
  result.x = x0;
  result.y = y0;
  if (!all_finite(y0)) {
    result.status = IntegrationStatus::NonFiniteState;
    result.message = "initial state is not finite";
    return result;
  }

  State dy(dim);
  auto evaluate = [&](double x, std::span<const double> y) -> bool {
    ++result.derivative_evaluations;
    try {
      f(x, y, dy);
    } catch (const std::exception& e) {
      result.status = IntegrationStatus::CallbackFailed;
      result.message = e.what();
      return false;
    }
    if (!all_finite(dy)) {
      result.status = IntegrationStatus::NonFiniteState;
      result.message = "derivative is not finite at x = " + std::to_string(x);
      return false;
    }
    return true;
  };

  if (!evaluate(x0, y0)) return result;
  history.push(x0, y0, dy);

  double x = x0;
  double dx = config.dx_initial;
  for (std::size_t i = 0;; ++i) {
    if (i >= config.max_steps) {
      result.status = IntegrationStatus::MaxStepsExceeded;
      result.message = "exceeded " + std::to_string(config.max_steps) + " steps";
      return result;
    }

    StepRecord rec;
    rec.index = i;
    rec.dx = dx;
    rec.at_min_step = config.mode == Mode::AbmAdaptive && i > 0 && dx <= config.dx_min;
    // A remainder below 1e-9 dx is absorbed rather than left as a sliver step.
    if (stop.x_end && x + dx * (1.0 + 1e-9) >= *stop.x_end) {
      rec.dx = *stop.x_end - x;
      rec.clamped_to_end = true;
    }
    const double x_next = rec.clamped_to_end ? *stop.x_end : x + rec.dx;
    if (!(x_next > x)) {
      result.status = IntegrationStatus::StepUnderflow;
      result.message = "step size underflow at x = " + std::to_string(x);
      return result;
    }
    rec.x_next = x_next;
    rec.effective_order = effective_order(i, config.order_ab);
    const auto nodes = static_cast<std::size_t>(rec.effective_order);

    rec.y_ab = ab_predict(history, nodes, rec.dx);
    if (!all_finite(rec.y_ab)) {
      result.status = IntegrationStatus::NonFiniteState;
      result.message = "prediction is not finite at x = " + std::to_string(x_next);
      return result;
    }

    if (config.mode == Mode::AbFixed) {
      rec.y_am = rec.y_ab;
      rec.epsilon.assign(dim, 0.0);
    } else {
      if (!evaluate(x_next, rec.y_ab)) return result;
      rec.y_am = am_correct(history, nodes, dy, rec.dx);
      if (!all_finite(rec.y_am)) {
        result.status = IntegrationStatus::NonFiniteState;
        result.message = "correction is not finite at x = " + std::to_string(x_next);
        return result;
      }
      FractionalCorrection eps = fractional_correction(rec.y_ab, rec.y_am);
      rec.epsilon = std::move(eps.epsilon);
      rec.epsilon_max = eps.max;
    }

    if (!evaluate(x_next, rec.y_am)) return result;
    history.push(x_next, rec.y_am, dy);
    x = x_next;
    result.x = x;
    result.y = rec.y_am;
    result.steps = i + 1;
    if (sink) sink(rec);

    if (rec.clamped_to_end) {
      result.status = IntegrationStatus::ReachedEnd;
      return result;
    }
    if (stop.predicate && stop.predicate(x, result.y)) {
      result.status = IntegrationStatus::StopConditionMet;
      return result;
    }
    if (config.mode == Mode::AbmAdaptive) {
      dx = next_step_size(rec.epsilon_max, config, rec.effective_order + 1, rec.dx);
    }
  }
}

}  // namespace abm
