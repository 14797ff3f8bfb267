#include "abm/tov/star.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "abm/errors.hpp"
#include "abm/tov/eos.hpp"

namespace abm::tov {

namespace {

class HorizonError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace

double compactness(double r, double m, const PhysicalConstants& k) noexcept {
  if (r == 0.0) return 0.0;
  return 2.0 * k.gravitational * m / (k.speed_of_light * k.speed_of_light * r);
}

TovRates tov_derivatives(double r, double m, double p, const PhysicalConstants& k) {
  TovRates out;
  if (p < 0.0) {
    out.status = RateStatus::NegativePressure;
    return out;
  }
  if (r == 0.0) return out;

  const double c2 = k.speed_of_light * k.speed_of_light;
  const double comp = compactness(r, m, k);
  if (comp >= 1.0) {
    out.status = RateStatus::Horizon;
    return out;
  }
  const double rho = eos_energy_density(invert_pressure(p, k), k);
  const double four_pi_over_c2 = 4.0 * std::numbers::pi / c2;
  out.dm_dr = four_pi_over_c2 * r * r * rho;
  out.dp_dr = -(k.gravitational / (c2 * r * r)) * (rho + p) * (m + four_pi_over_c2 * r * r * r * p) /
              (1.0 - comp);
  return out;
}

IntegratorConfig default_star_config(int order, double tolerance) {
  return IntegratorConfig{.order_ab = order,
                          .target_correction = tolerance,
                          .dx_initial = 10.0,
                          .dx_min = 10.0,
                          .growth_cap = 3.0,
                          .mode = Mode::AbmAdaptive,
                          .max_steps = 200'000};
}

std::string_view to_string(StarStatus status) noexcept {
  switch (status) {
    case StarStatus::Ok: return "ok";
    case StarStatus::Horizon: return "horizon";
    case StarStatus::MaxSteps: return "max_steps";
    case StarStatus::Failed: return "failed";
  }
  return "unknown";
}

StarSolution integrate_star(double p_central, const IntegratorConfig& config,
                            const PhysicalConstants& k, bool keep_trajectory) {
  if (!(p_central > 0.0) || !std::isfinite(p_central)) {
    throw ConfigError("central pressure must be positive and finite");
  }
  k.validate();
  config.validate();

  StarSolution sol;
  sol.p_central = p_central;
  if (keep_trajectory) {
    sol.trajectory.push_back(StarStep{0, 0.0, 0.0, 0.0, p_central, 0.0, 0, false, false, false});
  }

  bool clamped = false;
  bool horizon = false;
  auto rates = [&](double r, std::span<const double> y, std::span<double> dydr) {
    double p = y[1];
    if (p < 0.0) {
      // Past the surface: the gas has no pressure or density left.
      clamped = true;
      p = 0.0;
    }
    const TovRates t = tov_derivatives(r, y[0], p, k);
    if (t.status == RateStatus::Horizon) {
      horizon = true;
      throw HorizonError("horizon formed at r = " + std::to_string(r) + " cm");
    }
    dydr[0] = t.dm_dr;
    dydr[1] = t.dp_dr;
  };
  auto surface = [](double, std::span<const double> y) { return !(y[1] > 0.0); };
  auto sink = [&](const StepRecord& rec) {
    const bool terminal = !(rec.y_am[1] > 0.0);
    if (keep_trajectory) {
      sol.trajectory.push_back(StarStep{rec.index + 1, rec.x_next, rec.dx, rec.y_am[0], rec.y_am[1],
                                        rec.epsilon_max, rec.effective_order, rec.at_min_step,
                                        clamped, terminal});
    }
    clamped = false;
  };

  IntegrationResult res =
      integrate(rates, State{0.0, p_central}, 0.0, StopCondition::when(surface), config, sink);

  sol.steps = res.steps;
  sol.derivative_evaluations = res.derivative_evaluations;
  sol.radius = res.x;
  sol.mass = res.y[0];
  sol.message = res.message;
  switch (res.status) {
    case IntegrationStatus::StopConditionMet:
    case IntegrationStatus::ReachedEnd:
      sol.status = StarStatus::Ok;
      break;
    case IntegrationStatus::MaxStepsExceeded:
      sol.status = StarStatus::MaxSteps;
      break;
    case IntegrationStatus::CallbackFailed:
      sol.status = horizon ? StarStatus::Horizon : StarStatus::Failed;
      break;
    default:
      sol.status = StarStatus::Failed;
      break;
  }
  return sol;
}

}  // namespace abm::tov
